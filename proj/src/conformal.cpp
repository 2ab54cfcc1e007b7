#include "dressing/conformal.hpp"

#include <set>
#include <stdexcept>

#include "dressing/random_fields.hpp"

namespace dressing::conformal {

using chart::exterior_d;
using chart::form0;
using chart::Idx;
using chart::wedge;

namespace {

const Expr kI = Expr::i();

Expr half() { return Expr::rational(1, 2); }

const double kEta[4] = {1.0, -1.0, -1.0, -1.0};

std::set<Idx> key_union(const Blocks& b) {
  std::set<Idx> keys;
  for (const auto* f : {&b.a, &b.P, &b.theta, &b.A})
    for (const auto& [I, m] : f->comp) keys.insert(I);
  return keys;
}

}  // namespace

Blocks zero_blocks(int deg) {
  return {MatrixForm(deg, 1, 1), MatrixForm(deg, 1, 4), MatrixForm(deg, 4, 1),
          MatrixForm(deg, 4, 4)};
}

MatrixForm assemble_blocks(const Blocks& b) {
  MatrixForm w(b.theta.deg, 6, 6);
  for (const auto& I : key_union(b)) {
    groups::SO24Blocks sb;
    sb.eps = b.a.component(I)(0, 0);
    sb.iota = b.P.component(I);
    sb.tau = b.theta.component(I);
    sb.s = b.A.component(I);
    w.set(I, groups::so24_assemble(sb));
  }
  return w;
}

Blocks split_blocks(const MatrixForm& w) {
  if (w.rows != 6 || w.cols != 6)
    throw std::invalid_argument("split_blocks expects a 6x6 form");
  Blocks b = zero_blocks(w.deg);
  for (const auto& [I, m] : w.comp) {
    groups::SO24Blocks sb = groups::so24_extract(m);
    ExMat a(1, 1);
    a(0, 0) = sb.eps;
    b.a.set(I, a);
    b.P.set(I, sb.iota);
    b.theta.set(I, sb.tau);
    b.A.set(I, sb.s);
  }
  return b;
}

Blocks curvature_blocks(const Blocks& conn) {
  MatrixForm w = assemble_blocks(conn);
  return split_blocks(exterior_d(w) + wedge(w, w));
}

BoostDressing boost_dressing(const Blocks& conn, const FieldPair& e) {
  ExMat q(1, 4);
  for (int b = 0; b < 4; ++b) {
    Expr s;
    for (int mu = 0; mu < 4; ++mu)
      s = s + conn.a.component({uint8_t(mu)})(0, 0) * e.inverse(mu, b);
    q(0, b) = s;
  }
  return {q, groups::k1_field(q)};
}

Blocks dress_boost(const Blocks& conn, const BoostDressing& u1) {
  gauge::Connection c{assemble_blocks(conn), {}};
  gauge::GroupField gf =
      gauge::make_dressing(u1.u, groups::GroupKind::K1, "conformal boost");
  return split_blocks(gauge::dress(c, gf).omega);
}

Expr tractor_pairing(const ExMat& x, const ExMat& y) {
  return (x.transpose() * groups::sigma6() * y)(0, 0);
}

MatrixForm pairing_form(const MatrixForm& x, const MatrixForm& y) {
  return wedge(wedge(x.transpose(), form0(groups::sigma6())), y);
}

MatrixForm covariant_d(const MatrixForm& conn_form, const MatrixForm& phi) {
  return exterior_d(phi) + wedge(conn_form, phi);
}

MatrixForm covariant_d(const Blocks& conn, const MatrixForm& phi) {
  return covariant_d(assemble_blocks(conn), phi);
}

FieldPair embed_lorentz(const FieldPair& S) {
  Expr one = Expr::integer(1);
  return {groups::k0_matrix(one, S.value), groups::k0_matrix(one, S.inverse)};
}

Blocks residual_lorentz_blocks(const Blocks& w1, const FieldPair& S) {
  Blocks out = zero_blocks(w1.theta.deg);
  MatrixForm Sv = form0(S.value), Si = form0(S.inverse);
  out.a = w1.a;
  out.P = wedge(w1.P, Sv);
  out.theta = wedge(Si, w1.theta);
  out.A = wedge(Si, wedge(w1.A, Sv)) + wedge(Si, exterior_d(Sv));
  return out;
}

ExMat frame_row(const Expr& f, const FieldPair& e) {
  ExMat r(1, 4);
  for (int b = 0; b < 4; ++b) {
    Expr s;
    for (int mu = 0; mu < 4; ++mu) s = s + f.diff(mu) * e.inverse(mu, b);
    r(0, b) = s;
  }
  return r;
}

WeylMap weyl_map(const Expr& w, const FieldPair& e) {
  WeylMap zm;
  zm.w = w;
  zm.z = sym::exp(w);
  zm.upsilon = frame_row(w, e);
  ExMat id4 = ExMat::identity(4);
  zm.Z = {groups::k0_matrix(zm.z, id4), groups::k0_matrix(zm.z.pow(-1), id4)};
  zm.C = groups::mul(groups::k1_field(zm.upsilon), zm.Z);
  return zm;
}

gauge::Cocycle weyl_cocycle(const FieldPair& e) {
  gauge::CocycleSpec spec;
  spec.n = 6;
  spec.A = [e](const Expr& w) { return groups::k1_field(frame_row(w, e)); };
  spec.B = [](const Expr& w) {
    ExMat id4 = ExMat::identity(4);
    Expr z = sym::exp(w);
    return FieldPair{groups::k0_matrix(z, id4), groups::k0_matrix(z.pow(-1), id4)};
  };
  spec.pulled = [e](const Expr& jp, const Expr& jby) {
    return groups::k1_field(frame_row(jp, e) * sym::exp(-jby));
  };
  return gauge::make_cocycle(spec);
}

gauge::Cocycle weyl_spin_cocycle(const FieldPair& e) {
  gauge::CocycleSpec spec;
  spec.n = 4;
  spec.A = [e](const Expr& w) { return groups::k1_spin_field(frame_row(w, e)); };
  spec.B = [](const Expr& w) {
    Expr zh = sym::exp(w * half());
    ExMat v(4, 4), vi(4, 4);
    ExMat id2 = ExMat::identity(2);
    v.set_block(0, 0, id2 * zh);
    v.set_block(2, 2, id2 * zh.pow(-1));
    vi.set_block(0, 0, id2 * zh.pow(-1));
    vi.set_block(2, 2, id2 * zh);
    return FieldPair{v, vi};
  };
  spec.pulled = [e](const Expr& jp, const Expr& jby) {
    return groups::k1_spin_field(frame_row(jp, e) * sym::exp(-jby));
  };
  return gauge::make_cocycle(spec);
}

Blocks residual_weyl_blocks(const Blocks& w1, const WeylMap& zm) {
  Blocks out = zero_blocks(w1.theta.deg);
  Expr zi = zm.z.pow(-1);
  MatrixForm ups = form0(zm.upsilon);
  MatrixForm ups_t = form0(groups::eta_transpose_row(zm.upsilon));
  MatrixForm theta_t = groups::eta_transpose_col(w1.theta);
  Expr ups2 = (zm.upsilon * groups::eta_transpose_row(zm.upsilon))(0, 0);

  out.a = w1.a;
  out.P = (w1.P + exterior_d(ups) - wedge(ups, w1.A) -
           wedge(wedge(ups, w1.theta), ups) + theta_t * (ups2 * half())) *
          zi;
  out.A = w1.A + wedge(w1.theta, ups) - wedge(ups_t, theta_t);
  out.theta = w1.theta * zm.z;
  return out;
}

MatrixForm residual_weyl_tractor(const MatrixForm& phi1, const WeylMap& zm) {
  ExMat v = phi1.component({});
  ExMat ell = v.block(1, 0, 4, 1);
  ExMat ups_t = groups::eta_transpose_row(zm.upsilon);
  Expr ups2 = (zm.upsilon * ups_t)(0, 0);
  ExMat out(6, 1);
  out(0, 0) = (v(0, 0) - (zm.upsilon * ell)(0, 0) + half() * ups2 * v(5, 0)) *
              zm.z.pow(-1);
  ExMat mid = ell - ups_t * v(5, 0);
  for (int i = 0; i < 4; ++i) out(i + 1, 0) = mid(i, 0);
  out(5, 0) = zm.z * v(5, 0);
  return form0(out);
}

MatrixForm spin_form(const MatrixForm& w) {
  return w.map_components(
      [](const ExMat& m) { return groups::so24_to_su22(m); }, 4, 4);
}

FieldPair spin_boost_dressing(const ExMat& q) { return groups::k1_spin_field(q); }

FieldPair embed_lorentz_spin(const FieldPair& Sbar) {
  ExMat v(4, 4), vi(4, 4);
  v.set_block(0, 0, Sbar.inverse.conj_transpose());
  v.set_block(2, 2, Sbar.value);
  vi.set_block(0, 0, Sbar.value.conj_transpose());
  vi.set_block(2, 2, Sbar.inverse);
  return {v, vi};
}

FieldPair weyl_spin_map(const WeylMap& zm) {
  Expr zh = sym::exp(zm.w * half());
  Expr zhi = zh.pow(-1);
  ExMat id2 = ExMat::identity(2);
  ExMat ub = groups::bar_cov(zm.upsilon);
  ExMat v(4, 4), vi(4, 4);
  v.set_block(0, 0, id2 * zh);
  v.set_block(2, 2, id2 * zhi);
  v.set_block(0, 2, ub * (-(kI * zhi)));
  vi.set_block(0, 0, id2 * zhi);
  vi.set_block(2, 2, id2 * zh);
  vi.set_block(0, 2, ub * (kI * zhi));
  return {v, vi};
}

MatrixForm residual_weyl_twistor(const MatrixForm& psi1, const WeylMap& zm) {
  ExMat v = psi1.component({});
  Expr zh = sym::exp(zm.w * half());
  ExMat ub = groups::bar_cov(zm.upsilon);
  ExMat pi = v.block(0, 0, 2, 1), om = v.block(2, 0, 2, 1);
  ExMat top = (pi + (ub * om) * kI) * zh.pow(-1);
  ExMat bot = om * zh;
  ExMat out(4, 1);
  out.set_block(0, 0, top);
  out.set_block(2, 0, bot);
  return form0(out);
}

Expr twistor_helicity(const MatrixForm& psi) {
  ExMat v = psi.component({});
  return (v.conj_transpose() * groups::sigma_bar4() * v)(0, 0) * half();
}

ExMat conformal_ghost(const Expr& eps, const FieldPair& e) {
  groups::SO24Blocks b;
  b.eps = eps;
  b.s = ExMat(4, 4);
  b.tau = ExMat(4, 1);
  b.iota = frame_row(eps, e);
  return groups::so24_assemble(b);
}

ExMat weyl_ghost(const Expr& eps) {
  groups::SO24Blocks b;
  b.eps = eps;
  b.s = ExMat(4, 4);
  b.tau = ExMat(4, 1);
  b.iota = ExMat(1, 4);
  return groups::so24_assemble(b);
}

ExMat lorentz_ghost(const ExMat& s) {
  groups::SO24Blocks b;
  b.s = s;
  b.tau = ExMat(4, 1);
  b.iota = ExMat(1, 4);
  return groups::so24_assemble(b);
}

ExMat boost_ghost(const ExMat& iota) {
  groups::SO24Blocks b;
  b.s = ExMat(4, 4);
  b.tau = ExMat(4, 1);
  b.iota = iota;
  return groups::so24_assemble(b);
}

NormalGeometry normal_conformally_flat(const Expr& p) {
  Expr om = sym::exp(p);
  ExMat id4 = ExMat::identity(4);
  FieldPair e{id4 * om, id4 * om.pow(-1)};
  Metric m = gr::induced_metric(e);
  MatrixForm theta = gr::coframe_of(e.value);
  ExMat fr = frame_row(p, e);

  // Levi-Civita in the conformal frame: A^a_b = Y_b theta^a - Y^a theta_b.
  MatrixForm A(1, 4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    ExMat mm(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        mm(a, b) = fr(0, b) * e.value(a, mu) -
                   Expr::constant(kEta[a] * kEta[b]) * fr(0, a) * e.value(b, mu);
    A.set({uint8_t(mu)}, mm);
  }

  gr::Dressed d = gr::dress_gr({A, theta}, e);
  MatrixForm sR = exterior_d(d.gamma) + wedge(d.gamma, d.gamma);
  ExMat ric = gr::ricci_tensor(sR).component({});
  Expr rs;
  for (int nu = 0; nu < 4; ++nu)
    for (int sg = 0; sg < 4; ++sg) rs = rs + m.ginv(nu, sg) * ric(nu, sg);

  ExMat pm(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      pm(mu, nu) = (ric(mu, nu) - rs * m.g(mu, nu) * Expr::rational(1, 6)) *
                   Expr::rational(-1, 2);

  NormalGeometry out;
  out.conn = Blocks{MatrixForm(1, 1, 1), row_block_of_tensor(form0(pm), e),
                    theta, A};
  out.e = e;
  out.m = m;
  out.schouten = form0(pm);
  return out;
}

MatrixForm row_block_of_tensor(const MatrixForm& T, const FieldPair& e) {
  ExMat tm = T.component({});
  MatrixForm out(1, 1, 4);
  for (int mu = 0; mu < 4; ++mu) {
    ExMat row(1, 4);
    for (int b = 0; b < 4; ++b) {
      Expr s;
      for (int nu = 0; nu < 4; ++nu) s = s + tm(mu, nu) * e.inverse(nu, b);
      row(0, b) = s;
    }
    out.set({uint8_t(mu)}, row);
  }
  return out;
}

Blocks random_blocks(SplitMix64& rng, int poly_deg) {
  Blocks b = zero_blocks(1);
  b.a = fields::random_form(rng, 1, 1, 1, poly_deg);
  b.P = fields::random_form(rng, 1, 1, 4, poly_deg);
  b.theta = fields::random_form(rng, 1, 4, 1, poly_deg);
  b.A = gr::random_lorentz_one_form(rng, poly_deg);
  return b;
}

MatrixForm random_tractor(SplitMix64& rng) {
  return fields::random_form(rng, 0, 6, 1, 2);
}

MatrixForm random_twistor(SplitMix64& rng) {
  ExMat v(4, 1);
  for (int i = 0; i < 4; ++i) v(i, 0) = fields::random_complex_poly(rng, 2);
  return form0(v);
}

nlohmann::json fixture_to_json(const Fixture& f) {
  return nlohmann::json{{"schema", "conformal-fixture/1"},
                        {"e", form0(f.e.value).to_json()},
                        {"e_inverse", form0(f.e.inverse).to_json()},
                        {"w", f.w.to_json()},
                        {"tractor", f.tractor.to_json()},
                        {"twistor", f.twistor.to_json()}};
}

Fixture fixture_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != "conformal-fixture/1")
    throw std::invalid_argument("not a conformal-fixture/1 document");
  Fixture f;
  MatrixForm ev = MatrixForm::from_json(j.at("e"));
  MatrixForm ei = MatrixForm::from_json(j.at("e_inverse"));
  if (ev.deg != 0 || ev.rows != 4 || ev.cols != 4 || ei.deg != 0 ||
      ei.rows != 4 || ei.cols != 4)
    throw std::invalid_argument("frame and inverse must be 4x4 fields");
  f.e = FieldPair{ev.component({}), ei.component({})};
  CMat prod = eval_mat(f.e.value * f.e.inverse, {0.1, 0.2, -0.1, 0.3});
  if (max_abs(prod - CMat::identity(4)) > 1e-10)
    throw std::invalid_argument("frame inverse does not invert the frame");
  f.w = Expr::from_json(j.at("w"));
  f.tractor = MatrixForm::from_json(j.at("tractor"));
  f.twistor = MatrixForm::from_json(j.at("twistor"));
  if (f.tractor.deg != 0 || f.tractor.rows != 6 || f.tractor.cols != 1)
    throw std::invalid_argument("tractor must be a 6x1 field");
  if (f.twistor.deg != 0 || f.twistor.rows != 4 || f.twistor.cols != 1)
    throw std::invalid_argument("twistor must be a 4x1 field");
  return f;
}

}  // namespace dressing::conformal
