#include "dressing/ew.hpp"

#include "dressing/random_fields.hpp"

namespace dressing::ew {

using chart::entry_form;
using chart::exterior_d;
using chart::hodge;
using chart::Metric;
using chart::scalar_form;
using chart::scalar_times_identity;
using chart::trace_form;
using chart::volume_form;
using chart::wedge;

namespace {

Expr c(double v) { return Expr::constant(v); }

MatrixForm scalar0(const Expr& e) { return scalar_form(0, {}, e); }

}  // namespace

Expr phi_norm(const MatrixForm& phi) {
  ExMat p = phi.component({});
  return sym::sqrt(p(0, 0) * p(0, 0).conj() + p(1, 0) * p(1, 0).conj());
}

FieldPair polar_dressing(const MatrixForm& phi,
                         const std::vector<std::array<cnum, 4>>& probe, double tol) {
  if (phi.deg != 0 || phi.rows != 2 || phi.cols != 1)
    throw std::invalid_argument("polar_dressing expects a 2x1 scalar doublet");
  Expr eta = phi_norm(phi);
  for (const auto& x : probe) {
    if (std::abs(eta.evaluate(x, {})) < tol)
      throw DegenerateVacuum("scalar doublet vanishes on the chart, no polar dressing");
  }
  ExMat p = phi.component({});
  Expr inv_eta = eta.pow(-1);
  Expr bt = p(0, 0) * inv_eta;   // beta = phi_1 / |phi|
  Expr ap = p(1, 0) * inv_eta;   // alpha' = phi_2 / |phi|

  ExMat u(2, 2), ui(2, 2);
  u(0, 0) = ap.conj();
  u(0, 1) = bt;
  u(1, 0) = -bt.conj();
  u(1, 1) = ap;
  ui(0, 0) = ap;
  ui(0, 1) = -bt;
  ui(1, 0) = bt.conj();
  ui(1, 1) = ap.conj();
  return FieldPair{u, ui};
}

DressedFields dress_ew(const BareFields& f, double g,
                       const std::vector<std::array<cnum, 4>>& probe) {
  FieldPair u = polar_dressing(f.phi, probe);
  auto u_dr = gauge::make_dressing(u, groups::GroupKind::SU2, "SU(2)");
  gauge::Connection gb{f.b * c(g), {}};
  MatrixForm B = gauge::dress(gb, u_dr).omega * c(1.0 / g);
  return DressedFields{f.a, B, phi_norm(f.phi), u};
}

PhysicalFields weinberg_rotate(const DressedFields& d, double g, double gp) {
  double n = std::sqrt(g * g + gp * gp);
  double cw = g / n, sw = gp / n;
  MatrixForm B3 = entry_form(d.B, 0, 0);
  PhysicalFields p;
  p.A = d.a * c(cw) + B3 * c(sw);
  p.Z = B3 * c(cw) - d.a * c(sw);
  p.Wm = entry_form(d.B, 0, 1);
  p.Wp = entry_form(d.B, 1, 0);
  p.eta = d.eta;
  return p;
}

FieldPair alpha_tilde(const Expr& theta) {
  ExMat v(2, 2), vi(2, 2);
  v(0, 0) = groups::u1_field(theta);
  v(1, 1) = groups::u1_field(-theta);
  vi(0, 0) = groups::u1_field(-theta);
  vi(1, 1) = groups::u1_field(theta);
  return FieldPair{v, vi};
}

gauge::Cocycle residual_cocycle() {
  gauge::CocycleSpec spec;
  spec.n = 2;
  spec.A = [](const Expr&) {
    return FieldPair{ExMat::identity(2), ExMat::identity(2)};
  };
  spec.B = [](const Expr& t) { return alpha_tilde(t); };
  spec.pulled = [](const Expr&, const Expr&) {
    return FieldPair{ExMat::identity(2), ExMat::identity(2)};
  };
  return gauge::make_cocycle(spec);
}

MatrixForm ew_lagrangian(const BareFields& f, const Couplings& cp) {
  Metric mk = chart::minkowski();

  MatrixForm fa = exterior_d(f.a);
  MatrixForm gb = exterior_d(f.b) + wedge(f.b, f.b) * c(cp.g);
  MatrixForm F = scalar_times_identity(fa, 2) + gb;
  MatrixForm L = trace_form(wedge(F, hodge(F, mk))) * Expr::rational(1, 2);

  MatrixForm conn = scalar_times_identity(f.a * c(cp.gp), 2) + f.b * c(cp.g);
  MatrixForm Dphi = exterior_d(f.phi) + wedge(conn, f.phi);
  L = L + wedge(Dphi.conj().transpose(), hodge(Dphi, mk));

  ExMat p = f.phi.component({});
  Expr S = p(0, 0) * p(0, 0).conj() + p(1, 0) * p(1, 0).conj();
  L = L - volume_form(mk) * (c(cp.mu2) * S + c(cp.lambda) * S * S);
  return L;
}

DressedPieces make_pieces(const PhysicalFields& p) {
  DressedPieces q;
  q.A = p.A;
  q.dA = exterior_d(p.A);
  q.Z = p.Z;
  q.dZ = exterior_d(p.Z);
  q.Wm = p.Wm;
  q.dWm = exterior_d(p.Wm);
  q.Wp = p.Wp;
  q.dWp = exterior_d(p.Wp);
  q.eta = scalar0(p.eta);
  q.deta = exterior_d(q.eta);
  return q;
}

MatrixForm assemble_dressed(const DressedPieces& q, const Couplings& cp) {
  Metric mk = chart::minkowski();
  double n = std::sqrt(cp.g * cp.g + cp.gp * cp.gp);
  double cw = cp.g / n, sw = cp.gp / n;
  auto H = [&mk](const MatrixForm& f) { return hodge(f, mk); };

  MatrixForm WmWp = wedge(q.Wm, q.Wp);
  MatrixForm AWm = wedge(q.A, q.Wm), AWp = wedge(q.A, q.Wp);
  MatrixForm ZWm = wedge(q.Z, q.Wm), ZWp = wedge(q.Z, q.Wp);

  MatrixForm L = wedge(q.dA, H(q.dA)) + wedge(q.dZ, H(q.dZ)) + wedge(q.dWm, H(q.dWp));

  L = L + (wedge(q.dA, H(WmWp)) - wedge(q.dWm, H(AWp)) + wedge(q.dWp, H(AWm))) *
              c(2.0 * cp.g * sw);
  L = L + (wedge(q.dZ, H(WmWp)) - wedge(q.dWm, H(ZWp)) + wedge(q.dWp, H(ZWm))) *
              c(2.0 * cp.g * cw);

  L = L + wedge(WmWp, H(WmWp)) * c(cp.g * cp.g);
  L = L - (wedge(AWm, H(AWp)) * c(sw * sw) +
           (wedge(AWm, H(ZWp)) + wedge(ZWm, H(AWp))) * c(sw * cw) +
           wedge(ZWm, H(ZWp)) * c(cw * cw)) *
              c(4.0 * cp.g * cp.g);

  Expr eta2 = q.eta.component({})(0, 0).pow(2);
  L = L + wedge(q.deta, H(q.deta));
  L = L - wedge(q.Wp, H(q.Wm)) * (c(cp.g * cp.g) * eta2);
  L = L - wedge(q.Z, H(q.Z)) * (c(cp.g * cp.g + cp.gp * cp.gp) * eta2);
  L = L - volume_form(mk) * (c(cp.mu2) * eta2 + c(cp.lambda) * eta2 * eta2);
  return L;
}

MatrixForm ew_lagrangian_dressed(const PhysicalFields& p, const Couplings& cp) {
  return assemble_dressed(make_pieces(p), cp);
}

cnum dressed_value(const DressedPieces& q, const Couplings& cp,
                   const std::array<cnum, 4>& x) {
  DressedPieces fz;
  fz.A = chart::freeze_form(q.A, x);
  fz.dA = chart::freeze_form(q.dA, x);
  fz.Z = chart::freeze_form(q.Z, x);
  fz.dZ = chart::freeze_form(q.dZ, x);
  fz.Wm = chart::freeze_form(q.Wm, x);
  fz.dWm = chart::freeze_form(q.dWm, x);
  fz.Wp = chart::freeze_form(q.Wp, x);
  fz.dWp = chart::freeze_form(q.dWp, x);
  fz.eta = chart::freeze_form(q.eta, x);
  fz.deta = chart::freeze_form(q.deta, x);
  MatrixForm L = assemble_dressed(fz, cp);
  return L.component({0, 1, 2, 3})(0, 0).evaluate(x, {});
}

Masses ew_masses(const Couplings& c) {
  Masses m;
  if (c.mu2 >= 0.0) return m;  // symmetric phase, no vacuum expectation value
  if (c.lambda <= 0.0)
    throw std::invalid_argument("broken phase needs lambda > 0, the potential is unbounded");
  m.eta0 = std::sqrt(-c.mu2 / (2.0 * c.lambda));
  m.mW = m.eta0 * c.g;
  m.mZ = m.eta0 * std::sqrt(c.g * c.g + c.gp * c.gp);
  m.mH = m.eta0 * 2.0 * c.lambda;
  return m;
}

BareFields random_bare_fields(SplitMix64& rng) {
  BareFields f;
  f.a = MatrixForm(1, 1, 1);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(1, 1);
    m(0, 0) = Expr::i() * fields::random_poly(rng, 1);
    f.a.set({mu}, m);
  }
  f.b = MatrixForm(1, 2, 2);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(2, 2);
    for (int k = 1; k <= 3; ++k)
      m = m + groups::epauli(k) * (Expr::i() * fields::random_poly(rng, 1));
    f.b.set({mu}, m);
  }
  // the doublet stays well away from zero on the chart
  ExMat p(2, 1);
  p(0, 0) = fields::random_complex_poly(rng, 1);
  p(1, 0) = Expr::constant(1.0) + fields::random_complex_poly(rng, 1) * c(0.5);
  f.phi = chart::form0(p);
  return f;
}

Couplings random_couplings(SplitMix64& rng, bool broken_phase) {
  Couplings cp;
  cp.g = 0.4 + 0.8 * rng.uniform();
  cp.gp = 0.3 + 0.6 * rng.uniform();
  cp.lambda = 0.2 + 0.6 * rng.uniform();
  cp.mu2 = broken_phase ? -(0.3 + 0.9 * rng.uniform()) : 0.3 + 0.9 * rng.uniform();
  return cp;
}

nlohmann::json fixture_to_json(const BareFields& f, const Couplings& c) {
  return nlohmann::json{{"schema", "ew-fixture/1"},
                        {"couplings",
                         {{"g", c.g}, {"gp", c.gp}, {"mu2", c.mu2}, {"lambda", c.lambda}}},
                        {"a", f.a.to_json()},
                        {"b", f.b.to_json()},
                        {"phi", f.phi.to_json()}};
}

void fixture_from_json(const nlohmann::json& j, BareFields* f, Couplings* c) {
  if (j.value("schema", "") != "ew-fixture/1")
    throw std::invalid_argument("not an ew-fixture/1 document");
  const auto& jc = j.at("couplings");
  c->g = jc.at("g").get<double>();
  c->gp = jc.at("gp").get<double>();
  c->mu2 = jc.at("mu2").get<double>();
  c->lambda = jc.at("lambda").get<double>();
  if (c->g == 0.0 || c->gp == 0.0) throw std::invalid_argument("couplings must be nonzero");
  f->a = MatrixForm::from_json(j.at("a"));
  f->b = MatrixForm::from_json(j.at("b"));
  f->phi = MatrixForm::from_json(j.at("phi"));
  if (f->a.deg != 1 || f->a.rows != 1 || f->a.cols != 1)
    throw std::invalid_argument("field a must be a scalar 1-form");
  if (f->b.deg != 1 || f->b.rows != 2 || f->b.cols != 2)
    throw std::invalid_argument("field b must be a 2x2 1-form");
  if (f->phi.deg != 0 || f->phi.rows != 2 || f->phi.cols != 1)
    throw std::invalid_argument("field phi must be a 2x1 scalar doublet");
}

}  // namespace dressing::ew
