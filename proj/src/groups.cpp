#include "dressing/groups.hpp"

#include <stdexcept>

#include "dressing/random_fields.hpp"

namespace dressing::groups {

namespace {

const Expr kOne = Expr::constant(1.0);
const Expr kI = Expr::i();

Expr half() { return Expr::rational(1, 2); }

}  // namespace

GroupSpec spec_for(GroupKind k) {
  switch (k) {
    case GroupKind::U1: return {k, 1};
    case GroupKind::SU2: return {k, 2};
    case GroupKind::SO13: return {k, 4};
    case GroupKind::SL2C: return {k, 2};
    case GroupKind::SO24: return {k, 6};
    case GroupKind::SU22: return {k, 4};
    case GroupKind::ConformalH: return {k, 6};
    case GroupKind::K1: return {k, 6};
    case GroupKind::Weyl: return {k, 1};
    case GroupKind::GL: return {k, -1};
  }
  throw std::logic_error("unreachable");
}

const char* group_name(GroupKind k) {
  switch (k) {
    case GroupKind::U1: return "U(1)";
    case GroupKind::SU2: return "SU(2)";
    case GroupKind::SO13: return "SO(1,3)";
    case GroupKind::SL2C: return "SL(2,C)";
    case GroupKind::SO24: return "SO(2,4)";
    case GroupKind::SU22: return "SU(2,2)";
    case GroupKind::ConformalH: return "H = K0 K1";
    case GroupKind::K1: return "K1";
    case GroupKind::Weyl: return "Weyl";
    case GroupKind::GL: return "GL";
  }
  return "?";
}

CMat cpauli(int a) {
  CMat m(2, 2);
  switch (a) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cnum(0, -1); m(1, 0) = cnum(0, 1); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::out_of_range("pauli index");
  }
  return m;
}

ExMat epauli(int a) {
  CMat c = cpauli(a);
  ExMat m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = Expr::constant(c(i, j));
  return m;
}

ExMat sigma6() {
  ExMat m(6, 6);
  m(0, 5) = -kOne;
  m(5, 0) = -kOne;
  m(1, 1) = kOne;
  for (int i = 2; i < 5; ++i) m(i, i) = -kOne;
  return m;
}

CMat sigma6_numeric() { return eval_mat(sigma6(), {}); }

ExMat sigma_bar4() {
  ExMat m(4, 4);
  m(0, 2) = kOne;
  m(1, 3) = kOne;
  m(2, 0) = kOne;
  m(3, 1) = kOne;
  return m;
}

CMat sigma_bar4_numeric() { return eval_mat(sigma_bar4(), {}); }

namespace {

double frob(const CMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

CMat eta4_numeric() {
  CMat m(4, 4);
  m(0, 0) = 1.0;
  for (int i = 1; i < 4; ++i) m(i, i) = -1.0;
  return m;
}

}  // namespace

double group_membership_residual(GroupKind k, const CMat& M) {
  switch (k) {
    case GroupKind::U1:
      return std::abs(std::abs(M(0, 0)) - 1.0);
    case GroupKind::SU2:
      return frob(M.conj_transpose() * M - CMat::identity(2)) +
             std::abs(M.det() - cnum(1, 0));
    case GroupKind::SO13: {
      CMat eta = eta4_numeric();
      return frob(M.transpose() * eta * M - eta);
    }
    case GroupKind::SL2C:
      return std::abs(M.det() - cnum(1, 0));
    case GroupKind::SO24: {
      CMat s = sigma6_numeric();
      return frob(M.transpose() * s * M - s);
    }
    case GroupKind::SU22: {
      CMat s = sigma_bar4_numeric();
      return frob(M.conj_transpose() * s * M - s) + std::abs(M.det() - cnum(1, 0));
    }
    case GroupKind::ConformalH: {
      CMat s = sigma6_numeric();
      double r = frob(M.transpose() * s * M - s);
      // lower-triangular block structure of the parabolic
      r += std::abs(M(5, 0));
      for (int i = 1; i < 5; ++i) r += std::abs(M(i, 0)) + std::abs(M(5, i));
      return r;
    }
    case GroupKind::K1: {
      CMat r14(1, 4);
      for (int j = 0; j < 4; ++j) r14(0, j) = M(0, 1 + j);
      return frob(M - k1_matrix(r14));
    }
    case GroupKind::Weyl:
      return std::abs(M(0, 0).imag()) + (M(0, 0).real() > 0 ? 0.0 : 1.0);
    case GroupKind::GL:
      return std::abs(M.det()) > 1e-12 ? 0.0 : 1.0;
  }
  throw std::logic_error("unreachable");
}

double algebra_membership_residual(GroupKind k, const CMat& X) {
  switch (k) {
    case GroupKind::U1:
      return std::abs(X(0, 0).real());
    case GroupKind::SU2:
      return frob(X.conj_transpose() + X) + std::abs(X.trace());
    case GroupKind::SO13: {
      CMat eta = eta4_numeric();
      return frob(X.transpose() * eta + eta * X);
    }
    case GroupKind::SL2C:
      return std::abs(X.trace());
    case GroupKind::SO24: {
      CMat s = sigma6_numeric();
      return frob(X.transpose() * s + s * X);
    }
    case GroupKind::SU22: {
      CMat s = sigma_bar4_numeric();
      return frob(X.conj_transpose() * s + s * X) + std::abs(X.trace());
    }
    default:
      throw std::invalid_argument("no algebra residual for this group");
  }
}

ExMat eta_transpose_col(const ExMat& col) {
  if (col.rows() != 4 || col.cols() != 1)
    throw std::invalid_argument("eta_transpose_col expects a 4x1 column");
  return col.transpose() * chart::minkowski_eta();
}

ExMat eta_transpose_row(const ExMat& row) {
  if (row.rows() != 1 || row.cols() != 4)
    throw std::invalid_argument("eta_transpose_row expects a 1x4 row");
  return chart::minkowski_eta() * row.transpose();
}

MatrixForm eta_transpose_col(const MatrixForm& col) {
  ExMat eta = chart::minkowski_eta();
  return col.transpose().map_components([&](const ExMat& m) { return m * eta; }, 1, 4);
}

MatrixForm eta_transpose_row(const MatrixForm& row) {
  ExMat eta = chart::minkowski_eta();
  return row.transpose().map_components([&](const ExMat& m) { return eta * m; }, 4, 1);
}

ExMat k0_matrix(const Expr& z, const ExMat& S) {
  ExMat m(6, 6);
  m(0, 0) = z;
  m.set_block(1, 1, S);
  m(5, 5) = z.pow(-1);
  return m;
}

ExMat conformal_H_compose(const Expr& z, const ExMat& S, const ExMat& r) {
  return k0_matrix(z, S) * k1_matrix(r);
}

ConformalHParts decompose_conformal_H(const ExMat& M) {
  ConformalHParts p;
  p.z = M(0, 0);
  p.S = M.block(1, 1, 4, 4);
  p.r = M.block(0, 1, 1, 4) * p.z.pow(-1);
  return p;
}

ConformalHPartsNumeric decompose_conformal_H(const CMat& M) {
  ConformalHPartsNumeric p;
  p.z = M(0, 0);
  p.S = M.block(1, 1, 4, 4);
  p.r = M.block(0, 1, 1, 4) * (1.0 / p.z);
  CMat k1 = k1_matrix(p.r);
  CMat k0(6, 6);
  k0(0, 0) = p.z;
  k0.set_block(1, 1, p.S);
  k0(5, 5) = 1.0 / p.z;
  p.residual = frob(k0 * k1 - M);
  return p;
}

ExMat bar_map(const ExMat& x) {
  if (x.rows() != 4 || x.cols() != 1) throw std::invalid_argument("bar_map expects 4x1");
  ExMat m(2, 2);
  for (int a = 0; a < 4; ++a) m = m + epauli(a) * x(a, 0);
  return m;
}

ExMat bar_cov(const ExMat& r) {
  if (r.rows() != 1 || r.cols() != 4) throw std::invalid_argument("bar_cov expects 1x4");
  ExMat m(2, 2);
  for (int a = 0; a < 4; ++a) m = m + epauli(a) * (half() * r(0, a));
  return m;
}

CMat bar_map(const CMat& x) {
  CMat m(2, 2);
  for (int a = 0; a < 4; ++a) m = m + cpauli(a) * x(a, 0);
  return m;
}

CMat bar_cov(const CMat& r) {
  CMat m(2, 2);
  for (int a = 0; a < 4; ++a) m = m + cpauli(a) * (0.5 * r(0, a));
  return m;
}

ExMat sl2_of_so13(const ExMat& s) {
  // boosts b_k = s(0,k); rotations r_1 = s(2,3), r_2 = s(3,1), r_3 = s(1,2)
  ExMat m(2, 2);
  Expr b[3] = {s(0, 1), s(0, 2), s(0, 3)};
  Expr r[3] = {s(2, 3), s(3, 1), s(1, 2)};
  for (int k = 0; k < 3; ++k) m = m + epauli(k + 1) * (half() * (b[k] + kI * r[k]));
  return m;
}

CMat sl2_of_so13(const CMat& s) {
  CMat m(2, 2);
  cnum b[3] = {s(0, 1), s(0, 2), s(0, 3)};
  cnum r[3] = {s(2, 3), s(3, 1), s(1, 2)};
  for (int k = 0; k < 3; ++k) m = m + cpauli(k + 1) * (0.5 * (b[k] + cnum(0, 1) * r[k]));
  return m;
}

CMat spin_cover(const CMat& sbar) {
  CMat s(4, 4);
  CMat sd = sbar.conj_transpose();
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a)
      s(b, a) = 0.5 * (cpauli(b) * sbar * cpauli(a) * sd).trace();
  return s;
}

ExMat so24_assemble(const SO24Blocks& b) {
  ExMat m(6, 6);
  m(0, 0) = b.eps;
  m(5, 5) = -b.eps;
  m.set_block(1, 1, b.s);
  m.set_block(1, 0, b.tau);
  m.set_block(0, 1, b.iota);
  m.set_block(1, 5, eta_transpose_row(b.iota));
  m.set_block(5, 1, eta_transpose_col(b.tau));
  return m;
}

SO24Blocks so24_extract(const ExMat& X) {
  SO24Blocks b;
  b.eps = X(0, 0);
  b.s = X.block(1, 1, 4, 4);
  b.tau = X.block(1, 0, 4, 1);
  b.iota = X.block(0, 1, 1, 4);
  return b;
}

ExMat so24_to_su22(const ExMat& X) {
  SO24Blocks b = so24_extract(X);
  ExMat sb = sl2_of_so13(b.s);
  ExMat out(4, 4);
  ExMat id2 = ExMat::identity(2);
  ExMat half_eps = id2 * (half() * b.eps);
  out.set_block(0, 0, -(sb.conj_transpose() - half_eps));
  out.set_block(2, 2, sb - half_eps);
  out.set_block(0, 2, bar_cov(b.iota) * (-kI));
  out.set_block(2, 0, bar_map(b.tau) * kI);
  return out;
}

CMat so24_to_su22(const CMat& X) {
  ExMat ex(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) ex(i, j) = Expr::constant(X(i, j));
  return eval_mat(so24_to_su22(ex), {});
}

Expr u1_field(const Expr& theta) { return sym::cos(theta) + kI * sym::sin(theta); }

FieldPair su2_field(const Expr& c1, const Expr& c2, const Expr& c3) {
  // exp(sum c_k i sigma_k) = cos(r) 1 + sin(r)/r * sum c_k i sigma_k
  Expr r2 = c1 * c1 + c2 * c2 + c3 * c3;
  Expr r = sym::sqrt(r2);
  Expr sinc = sym::sin(r) * r.pow(-1);
  ExMat X(2, 2);
  Expr c[3] = {c1, c2, c3};
  for (int k = 0; k < 3; ++k) X = X + epauli(k + 1) * (kI * c[k]);
  ExMat id = ExMat::identity(2);
  FieldPair p;
  p.value = id * sym::cos(r) + X * sinc;
  p.inverse = id * sym::cos(r) - X * sinc;
  return p;
}

namespace {

FieldPair plane_element(int i, int j, const Expr& cii, const Expr& cij, const Expr& cji,
                        const Expr& cjj, const Expr& dii, const Expr& dij, const Expr& dji,
                        const Expr& djj) {
  ExMat v = ExMat::identity(4);
  v(i, i) = cii;
  v(i, j) = cij;
  v(j, i) = cji;
  v(j, j) = cjj;
  ExMat w = ExMat::identity(4);
  w(i, i) = dii;
  w(i, j) = dij;
  w(j, i) = dji;
  w(j, j) = djj;
  return {v, w};
}

void rot_plane(int axis, int* i, int* j) {
  static const int planes[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  *i = planes[axis - 1][0];
  *j = planes[axis - 1][1];
}

}  // namespace

FieldPair so13_rotation(int axis, const Expr& angle) {
  int i, j;
  rot_plane(axis, &i, &j);
  Expr c = sym::cos(angle), s = sym::sin(angle);
  // generator J_axis has [i][j] = +1, [j][i] = -1
  return plane_element(i, j, c, s, -s, c, c, -s, s, c);
}

FieldPair so13_boost(int axis, const Expr& rapidity) {
  Expr ep = sym::exp(rapidity), em = sym::exp(-rapidity);
  Expr ch = half() * (ep + em), sh = half() * (ep - em);
  return plane_element(0, axis, ch, sh, sh, ch, ch, -sh, -sh, ch);
}

FieldPair sl2_rotation(int axis, const Expr& angle) {
  Expr h = half() * angle;
  ExMat id = ExMat::identity(2);
  ExMat s = epauli(axis);
  FieldPair p;
  p.value = id * sym::cos(h) + s * (kI * sym::sin(h));
  p.inverse = id * sym::cos(h) - s * (kI * sym::sin(h));
  return p;
}

FieldPair sl2_boost(int axis, const Expr& rapidity) {
  Expr h = half() * rapidity;
  Expr ep = sym::exp(h), em = sym::exp(-h);
  Expr ch = half() * (ep + em), sh = half() * (ep - em);
  ExMat id = ExMat::identity(2);
  ExMat s = epauli(axis);
  FieldPair p;
  p.value = id * ch + s * sh;
  p.inverse = id * ch - s * sh;
  return p;
}

FieldPair mul(const FieldPair& a, const FieldPair& b) {
  return {a.value * b.value, b.inverse * a.inverse};
}

FieldPair identity_field(int n) { return {ExMat::identity(n), ExMat::identity(n)}; }

LorentzPair random_lorentz_field(SplitMix64& rng, int factors) {
  LorentzPair out{identity_field(4), identity_field(2)};
  for (int f = 0; f < factors; ++f) {
    int axis = rng.uniform_int(1, 3);
    Expr angle = fields::random_poly(rng, 1);
    if (rng.uniform() < 0.5) {
      out.vector = mul(out.vector, so13_rotation(axis, angle));
      out.spin = mul(out.spin, sl2_rotation(axis, angle));
    } else {
      out.vector = mul(out.vector, so13_boost(axis, angle));
      out.spin = mul(out.spin, sl2_boost(axis, angle));
    }
  }
  return out;
}

FieldPair k1_field(const ExMat& q) {
  FieldPair p;
  p.value = k1_matrix(q);
  p.inverse = k1_matrix(-q);
  return p;
}

FieldPair k1_spin_field(const ExMat& q) {
  ExMat m = ExMat::identity(4);
  ExMat mi = ExMat::identity(4);
  ExMat blk = bar_cov(q) * (-kI);
  m.set_block(0, 2, blk);
  mi.set_block(0, 2, -blk);
  return {m, mi};
}

CMat random_so13_algebra(SplitMix64& rng) {
  CMat s(4, 4);
  double b[3], r[3];
  for (int k = 0; k < 3; ++k) {
    b[k] = rng.range(-1.0, 1.0);
    r[k] = rng.range(-1.0, 1.0);
  }
  for (int k = 0; k < 3; ++k) {
    s(0, k + 1) = b[k];
    s(k + 1, 0) = b[k];
  }
  s(2, 3) = r[0];
  s(3, 2) = -r[0];
  s(3, 1) = r[1];
  s(1, 3) = -r[1];
  s(1, 2) = r[2];
  s(2, 1) = -r[2];
  return s;
}

SO24Blocks random_so24_blocks(SplitMix64& rng) {
  SO24Blocks b;
  b.eps = Expr::constant(rng.range(-1.0, 1.0));
  CMat s = random_so13_algebra(rng);
  b.s = ExMat(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b.s(i, j) = Expr::constant(s(i, j));
  b.tau = ExMat(4, 1);
  b.iota = ExMat(1, 4);
  for (int a = 0; a < 4; ++a) {
    b.tau(a, 0) = Expr::constant(rng.range(-1.0, 1.0));
    b.iota(0, a) = Expr::constant(rng.range(-1.0, 1.0));
  }
  return b;
}

CMat random_so24_algebra(SplitMix64& rng) {
  return eval_mat(so24_assemble(random_so24_blocks(rng)), {});
}

}  // namespace dressing::groups
