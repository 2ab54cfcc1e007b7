#include "dressing/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dressing/brst.hpp"
#include "dressing/conformal.hpp"
#include "dressing/ew.hpp"
#include "dressing/fd_oracle.hpp"
#include "dressing/gr.hpp"
#include "dressing/random_fields.hpp"

namespace dressing::harness {

namespace {

using chart::Expr;
using chart::form0;
using chart::MatrixForm;
using gauge::Connection;
using gauge::Section;
using gauge::TensorForm;
using groups::FieldPair;
using groups::GroupKind;
using sym::cnum;

using Pts = std::vector<std::array<cnum, 4>>;

Pts sample_points(SplitMix64& rng, int n) {
  Pts pts;
  for (int i = 0; i < n; ++i) pts.push_back(fields::random_point(rng));
  return pts;
}

double maxdiff(const MatrixForm& a, const MatrixForm& b, const Pts& pts) {
  double worst = 0.0;
  for (const auto& x : pts)
    worst = std::max(worst, chart::max_component_diff(a, b, x));
  return worst;
}

double maxabs(const MatrixForm& a, const Pts& pts) {
  double worst = 0.0;
  for (const auto& x : pts)
    worst = std::max(worst, chart::max_component_abs(a, x));
  return worst;
}

void upd(double& worst, double v) { worst = std::max(worst, v); }

MatrixForm su2_one_form(SplitMix64& rng, int poly_deg = 1) {
  MatrixForm w(1, 2, 2);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(2, 2);
    for (int k = 1; k <= 3; ++k)
      m = m + groups::epauli(k) * (Expr::i() * fields::random_poly(rng, poly_deg));
    w.set({mu}, m);
  }
  return w;
}

ExMat su2_algebra_field(SplitMix64& rng) {
  ExMat m(2, 2);
  for (int k = 1; k <= 3; ++k)
    m = m + groups::epauli(k) * (Expr::i() * fields::random_poly(rng, 1));
  return m;
}

FieldPair random_su2(SplitMix64& rng) {
  int a1 = rng.uniform_int(1, 3), a2 = rng.uniform_int(1, 3);
  return groups::mul(groups::sl2_rotation(a1, fields::random_poly(rng, 1)),
                     groups::sl2_rotation(a2, fields::random_poly(rng, 1)));
}

FieldPair inverse_pair(const FieldPair& f) {
  return FieldPair{f.inverse, f.value};
}

// Abelian cocycle on GL(2): unipotent A with a point-dependent slope, B a
// central circle factor pulling the slope back by a phase.
gauge::Cocycle gl2_cocycle(const Expr& slope) {
  gauge::CocycleSpec spec;
  spec.n = 2;
  spec.A = [slope](const Expr& t) {
    ExMat a = ExMat::identity(2), ai = ExMat::identity(2);
    a(0, 1) = slope * t;
    ai(0, 1) = -(slope * t);
    return FieldPair{a, ai};
  };
  spec.B = [](const Expr& t) {
    ExMat b = ExMat::identity(2), bi = ExMat::identity(2);
    b(0, 0) = groups::u1_field(t);
    bi(0, 0) = groups::u1_field(-t);
    return FieldPair{b, bi};
  };
  spec.pulled = [slope](const Expr& t, const Expr& by) {
    Expr s = slope * groups::u1_field(-by);
    ExMat a = ExMat::identity(2), ai = ExMat::identity(2);
    a(0, 1) = s * t;
    ai(0, 1) = -(s * t);
    return FieldPair{a, ai};
  };
  return gauge::make_cocycle(spec);
}

FieldPair center_u1(const Expr& t) {
  return FieldPair{ExMat::identity(2) * groups::u1_field(t),
                   ExMat::identity(2) * groups::u1_field(-t)};
}

double frob(const CMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

const nlohmann::json* fixture_with_schema(const RunContext& ctx,
                                          const std::string& schema) {
  if (!ctx.fixture) return nullptr;
  if (!ctx.fixture->contains("schema")) return nullptr;
  return (*ctx.fixture)["schema"] == schema ? ctx.fixture : nullptr;
}

conformal::Blocks random_cartan(SplitMix64& rng, const FieldPair& e) {
  conformal::Blocks b = conformal::random_blocks(rng, 1);
  b.theta = gr::coframe_of(e.value);
  return b;
}

// ---- core ----

double run_composite_invariance(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.composite_invariance", trial));
    auto pts = sample_points(rng, ctx.points);

    {  // SU(2)
      Connection omega{su2_one_form(rng), {}};
      Section phi{fields::random_form(rng, 0, 2, 1), {}};
      FieldPair u = random_su2(rng), gm = random_su2(rng);
      auto u_dr = gauge::make_dressing(u, GroupKind::SU2, "SU(2)");
      auto g = gauge::make_gauge_map(gm, GroupKind::SU2, "erased");
      auto u_g_dr = gauge::make_dressing(groups::mul(inverse_pair(gm), u),
                                         GroupKind::SU2, "SU(2)");
      upd(worst, maxdiff(gauge::dress(omega, u_dr).omega,
                         gauge::dress(gauge::gauge_transform(omega, g), u_g_dr).omega,
                         pts));
      upd(worst, maxdiff(gauge::dress(phi, u_dr).phi,
                         gauge::dress(gauge::gauge_transform(phi, g), u_g_dr).phi,
                         pts));
      TensorForm F{gauge::curvature(omega), {}};
      upd(worst, maxdiff(gauge::dress(F, u_dr).value,
                         gauge::dress(gauge::gauge_transform(F, g), u_g_dr).value,
                         pts));
    }
    {  // SO(1,3): the frame dressing of the gravity variables
      FieldPair e = gr::random_frame(rng, 1);
      gr::Geometry geo{gr::random_lorentz_one_form(rng), gr::coframe_of(e.value)};
      FieldPair S = groups::random_lorentz_field(rng, 1).vector;
      gr::Dressed d = gr::dress_gr(geo, e);
      gr::Dressed ds = gr::dress_gr(gr::lorentz_transform(geo, S),
                                    gr::lorentz_transform_frame(e, S));
      upd(worst, maxdiff(ds.gamma, d.gamma, pts));
      upd(worst, maxdiff(ds.coframe, d.coframe, pts));
      upd(worst, maxdiff(ds.g, d.g, pts));
    }
    {  // K1 inside GL(6)
      ExMat q(1, 4), r(1, 4);
      for (int a = 0; a < 4; ++a) {
        q(0, a) = fields::random_poly(rng, 1);
        r(0, a) = fields::random_poly(rng, 1);
      }
      Connection omega{fields::random_form(rng, 1, 6, 6, 1), {}};
      FieldPair u = groups::k1_field(q);
      FieldPair gm = groups::k1_field(r);
      auto u_dr = gauge::make_dressing(u, GroupKind::K1, "K1");
      auto g = gauge::make_gauge_map(gm, GroupKind::K1, "erased");
      auto u_g_dr = gauge::make_dressing(groups::mul(inverse_pair(gm), u),
                                         GroupKind::K1, "K1");
      upd(worst, maxdiff(gauge::dress(omega, u_dr).omega,
                         gauge::dress(gauge::gauge_transform(omega, g), u_g_dr).omega,
                         pts));
    }
  }
  return worst;
}

double run_curvature_naturality(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.curvature_naturality", trial));
    auto pts = sample_points(rng, ctx.points);

    Connection omega{su2_one_form(rng), {}};
    Section phi{fields::random_form(rng, 0, 2, 1), {}};
    auto u = gauge::make_dressing(
        groups::sl2_rotation(rng.uniform_int(1, 3), fields::random_poly(rng, 1)),
        GroupKind::SU2, "SU(2)");

    MatrixForm F = gauge::curvature(omega);
    Connection omega_u = gauge::dress(omega, u);
    upd(worst, maxdiff(gauge::curvature(omega_u),
                       gauge::dress(TensorForm{F, {}}, u).value, pts));

    Section phi_u = gauge::dress(phi, u);
    MatrixForm Du = gauge::covariant_derivative(omega_u, phi_u);
    MatrixForm DDu = chart::exterior_d(Du) + chart::wedge(omega_u.omega, Du);
    upd(worst, maxdiff(DDu, chart::wedge(gauge::curvature(omega_u), phi_u.phi),
                       pts));
  }
  return worst;
}

double run_residual_adjoint(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.residual_adjoint", trial));
    auto pts = sample_points(rng, ctx.points);

    Connection omega{su2_one_form(rng), {}};
    Section phi{fields::random_form(rng, 0, 2, 1), {}};
    FieldPair u = random_su2(rng), gm = random_su2(rng);
    auto u_dr = gauge::make_dressing(u, GroupKind::SU2, "SU(2)");
    auto g = gauge::make_gauge_map(gm, GroupKind::SU2, "residual");
    FieldPair u_g = groups::mul(groups::mul(inverse_pair(gm), u), gm);
    auto u_g_dr = gauge::make_dressing(u_g, GroupKind::SU2, "SU(2)");
    MatrixForm u_after = form0(u_g.value);

    Connection chi_u = gauge::dress(omega, u_dr);
    Connection two_path = gauge::dress(gauge::gauge_transform(omega, g), u_g_dr);
    Connection closed = gauge::residual_adjoint_transform(chi_u, g, u_dr, u_after, pts);
    upd(worst, maxdiff(two_path.omega, closed.omega, pts));

    Section s_two = gauge::dress(gauge::gauge_transform(phi, g), u_g_dr);
    Section s_closed = gauge::residual_adjoint_transform(gauge::dress(phi, u_dr),
                                                         g, u_dr, u_after, pts);
    upd(worst, maxdiff(s_two.phi, s_closed.phi, pts));
  }
  return worst;
}

double run_residual_twisted(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.residual_twisted", trial));
    auto pts = sample_points(rng, ctx.points);
    auto C = gl2_cocycle(Expr::constant(0.25 + rng.dyadic()));

    Connection omega{su2_one_form(rng), {}};
    Section phi{fields::random_form(rng, 0, 2, 1), {}};
    FieldPair u = groups::sl2_rotation(2, fields::random_poly(rng, 1));
    auto u_dr = gauge::make_dressing(u, GroupKind::SU2, "twisted");

    Expr t = fields::random_poly(rng, 1);
    FieldPair gm = center_u1(t);
    auto g = gauge::make_gauge_map(gm, GroupKind::U1, "center U(1)");
    FieldPair Ct = C.value(t);
    FieldPair u_g = groups::mul(groups::mul(inverse_pair(gm), u), Ct);
    auto u_g_dr = gauge::make_dressing(u_g, GroupKind::SU2, "twisted");

    Connection chi_u = gauge::dress(omega, u_dr);
    upd(worst, maxdiff(gauge::dress(gauge::gauge_transform(omega, g), u_g_dr).omega,
                       gauge::residual_twisted_transform(chi_u, Ct).omega, pts));
    upd(worst, maxdiff(gauge::dress(gauge::gauge_transform(phi, g), u_g_dr).phi,
                       gauge::residual_twisted_transform(gauge::dress(phi, u_dr), Ct).phi,
                       pts));
    TensorForm F_u = gauge::dress(TensorForm{gauge::curvature(omega), {}}, u_dr);
    TensorForm F_two = gauge::dress(
        gauge::gauge_transform(TensorForm{gauge::curvature(omega), {}}, g), u_g_dr);
    upd(worst, maxdiff(F_two.value,
                       gauge::residual_twisted_transform(F_u, Ct).value, pts));
  }
  return worst;
}

double run_twisted_composition(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.twisted_composition", trial));
    auto pts = sample_points(rng, ctx.points);
    auto C = gl2_cocycle(Expr::constant(0.25 + rng.dyadic()));

    FieldPair u = groups::sl2_rotation(3, fields::random_poly(rng, 1));
    Expr t1 = fields::random_poly(rng, 1);
    Expr t2 = fields::random_poly(rng, 1);
    FieldPair g1 = center_u1(t1), g2 = center_u1(t2), g12 = center_u1(t1 + t2);

    FieldPair u1 = groups::mul(groups::mul(inverse_pair(g1), u), C.value(t1));
    FieldPair u12 =
        groups::mul(groups::mul(inverse_pair(g2), u1), C.shifted_value(t1, t2));
    FieldPair direct = groups::mul(groups::mul(inverse_pair(g12), u), C.value(t1 + t2));
    upd(worst, maxdiff(form0(u12.value), form0(direct.value), pts));

    Connection omega{su2_one_form(rng), {}};
    auto u_dr = gauge::make_dressing(u, GroupKind::SU2, "twisted");
    Connection chi_u = gauge::dress(omega, u_dr);
    Connection stepped = gauge::residual_twisted_transform(
        gauge::residual_twisted_transform(chi_u, C.value(t1)),
        C.shifted_value(t1, t2));
    Connection direct_c = gauge::residual_twisted_transform(chi_u, C.value(t1 + t2));
    upd(worst, maxdiff(stepped.omega, direct_c.omega, pts));
  }
  return worst;
}

double run_cocycle(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "core.cocycle", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));

    auto C = gl2_cocycle(fields::random_poly(rng, 1));
    Expr t1 = fields::random_poly(rng, 1), t2 = fields::random_poly(rng, 1);
    upd(worst, gauge::cocycle_identity_residual(C, t1, t2, pts));
    upd(worst, gauge::cocycle_pullback_residual(C, t1, t2, pts));

    // chart-dependent Weyl factors, vector and spin carriers
    FieldPair e = gr::random_jacobian(rng);
    auto wc = conformal::weyl_cocycle(e);
    auto ws = conformal::weyl_spin_cocycle(e);
    Expr w1 = fields::random_poly(rng, 2), w2 = fields::random_poly(rng, 2);
    upd(worst, gauge::cocycle_identity_residual(wc, w1, w2, pts));
    upd(worst, gauge::cocycle_pullback_residual(wc, w1, w2, pts));
    upd(worst, gauge::cocycle_identity_residual(ws, w1, w2, pts));
    upd(worst, gauge::cocycle_pullback_residual(ws, w1, w2, pts));
  }
  return worst;
}

// ---- brst ----

double run_d_squared(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "brst.d_squared", trial));
    auto pts = sample_points(rng, ctx.points);
    for (int deg = 0; deg <= 2; ++deg) {
      MatrixForm f = fields::random_form(rng, deg, 2, 2);
      MatrixForm dd = chart::exterior_d(chart::exterior_d(f));
      if (!dd.is_structural_zero()) upd(worst, std::max(maxabs(dd, pts), 1.0));
    }
  }
  return worst;
}

double run_nilpotency(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "brst.nilpotency", trial));
    auto pts = sample_points(rng, ctx.points);
    Connection omega{su2_one_form(rng), {}};
    Section phi{fields::random_form(rng, 0, 2, 1), {}};
    TensorForm F{gauge::curvature(omega), {}};
    ExMat xi = su2_algebra_field(rng);
    ExMat zeta = su2_algebra_field(rng);
    upd(worst, brst::nilpotency_residual(omega, F, phi, xi, zeta, pts));
  }
  return worst;
}

double run_dressed_ghost(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "brst.dressed_ghost", trial));
    auto pts = sample_points(rng, ctx.points);

    auto u = gauge::make_dressing(random_su2(rng), GroupKind::SU2, "SU(2)");
    ExMat xi = su2_algebra_field(rng);
    MatrixForm v_erased = brst::dressed_ghost(
        u, xi, brst::dressing_flow(u, xi, brst::DressingResponse::Erased));
    upd(worst, maxabs(v_erased, pts));
    MatrixForm v_adj = brst::dressed_ghost(
        u, xi, brst::dressing_flow(u, xi, brst::DressingResponse::Adjoint));
    upd(worst, maxdiff(v_adj, form0(xi), pts));

    auto C = gl2_cocycle(fields::random_poly(rng, 1));
    Expr eps = fields::random_poly(rng, 1);
    ExMat c = C.ghost(eps);
    auto ut = gauge::make_dressing(
        groups::sl2_rotation(1, fields::random_poly(rng, 1)), GroupKind::SU2,
        "twisted");
    ExMat xic = ExMat::identity(2) * (Expr::i() * eps);
    MatrixForm v_tw = brst::dressed_ghost(
        ut, xic, brst::dressing_flow(ut, xic, brst::DressingResponse::Twisted, &c));
    upd(worst, maxdiff(v_tw, form0(c), pts));
  }
  return worst;
}

double run_conformal_ghost(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "brst.conformal_ghost", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));

    ExMat iota(1, 4), s(4, 4);
    for (int i = 0; i < 4; ++i) iota(0, i) = fields::random_poly(rng, 1);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        s = s + gr::lorentz_generator(a, b) * fields::random_poly(rng, 1);
    Expr eps = fields::random_poly(rng, 2);
    ExMat vi = conformal::boost_ghost(iota);
    ExMat vs = conformal::lorentz_ghost(s);
    ExMat ve = conformal::weyl_ghost(eps);

    // exact split on the identity frame: v1 = v_s + c(eps), entries of the
    // top row are the partials of eps
    FieldPair id = groups::identity_field(4);
    conformal::Blocks bi = random_cartan(rng, id);
    conformal::BoostDressing bdi = conformal::boost_dressing(bi, id);
    auto ui = gauge::make_dressing(bdi.u, GroupKind::K1, "conformal boost");
    ExMat cepsi = conformal::conformal_ghost(eps, id);
    MatrixForm sui =
        brst::dressing_flow(ui, vi, brst::DressingResponse::Erased) +
        brst::dressing_flow(ui, vs, brst::DressingResponse::Adjoint) +
        brst::dressing_flow(ui, ve, brst::DressingResponse::Twisted, &cepsi);
    MatrixForm v1i = brst::dressed_ghost(ui, vi + vs + ve, sui);
    ExMat gap = v1i.component({}) - (vs + cepsi);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (!gap(i, j).is_zero()) upd(worst, 1.0);
    for (int b = 0; b < 4; ++b)
      if (!(v1i.component({})(0, 1 + b) - eps.diff(b)).is_zero())
        upd(worst, 1.0);

    // generic frame, numeric agreement
    FieldPair e = gr::random_jacobian(rng);
    conformal::Blocks bg = random_cartan(rng, e);
    auto ug = gauge::make_dressing(conformal::boost_dressing(bg, e).u,
                                   GroupKind::K1, "conformal boost");
    ExMat ceps = conformal::conformal_ghost(eps, e);
    MatrixForm sug =
        brst::dressing_flow(ug, vi, brst::DressingResponse::Erased) +
        brst::dressing_flow(ug, vs, brst::DressingResponse::Adjoint) +
        brst::dressing_flow(ug, ve, brst::DressingResponse::Twisted, &ceps);
    MatrixForm v1g = brst::dressed_ghost(ug, vi + vs + ve, sug);
    upd(worst, maxdiff(v1g, form0(vs + ceps), pts));
  }
  return worst;
}

// ---- ew ----

cnum bare_value(const MatrixForm& L, const std::array<cnum, 4>& x) {
  return L.component({0, 1, 2, 3})(0, 0).evaluate(x, {});
}

double ew_equality_residual(const ew::BareFields& f, const ew::Couplings& cp,
                            const Pts& pts) {
  MatrixForm L = ew::ew_lagrangian(f, cp);
  ew::DressedPieces q =
      ew::make_pieces(ew::weinberg_rotate(ew::dress_ew(f, cp.g, pts), cp.g, cp.gp));
  double worst = 0.0;
  for (const auto& x : pts) {
    cnum lb = bare_value(L, x);
    cnum ld = ew::dressed_value(q, cp, x);
    upd(worst, std::abs(lb.imag()));
    upd(worst, std::abs(lb - ld) / std::max(1.0, std::abs(lb)));
  }
  return worst;
}

double run_lagrangian_equality(const RunContext& ctx) {
  double worst = 0.0;
  if (const auto* j = fixture_with_schema(ctx, "ew-fixture/1")) {
    ew::BareFields f;
    ew::Couplings cp;
    ew::fixture_from_json(*j, &f, &cp);
    SplitMix64 rng(stream_for(ctx.seed, "ew.lagrangian_equality.fixture", 0));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    (void)ew::ew_masses(cp);  // rejects a degenerate potential up front
    upd(worst, ew_equality_residual(f, cp, pts));
  }
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "ew.lagrangian_equality", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    upd(worst, ew_equality_residual(ew::random_bare_fields(rng),
                                    ew::random_couplings(rng), pts));
  }
  return worst;
}

double run_photon_decoupling(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "ew.photon_decoupling", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    ew::Couplings cp = ew::random_couplings(rng);
    ew::BareFields f = ew::random_bare_fields(rng);
    ew::DressedPieces qr = ew::make_pieces(
        ew::weinberg_rotate(ew::dress_ew(f, cp.g, pts), cp.g, cp.gp));
    qr.Wm = MatrixForm(1, 1, 1);
    qr.dWm = MatrixForm(2, 1, 1);
    qr.Wp = MatrixForm(1, 1, 1);
    qr.dWp = MatrixForm(2, 1, 1);
    ew::DressedPieces qA = qr, qZ = qr, qAZ = qr;
    qA.A = -qr.A;
    qA.dA = -qr.dA;
    qZ.Z = -qr.Z;
    qZ.dZ = -qr.dZ;
    qAZ.A = -qr.A;
    qAZ.dA = -qr.dA;
    qAZ.Z = -qr.Z;
    qAZ.dZ = -qr.dZ;
    for (const auto& x : pts) {
      cnum cross = (ew::dressed_value(qr, cp, x) - ew::dressed_value(qA, cp, x) -
                    ew::dressed_value(qZ, cp, x) + ew::dressed_value(qAZ, cp, x)) /
                   4.0;
      upd(worst, std::abs(cross));
    }
  }
  return worst;
}

double run_mass_ratio(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "ew.mass_ratio", trial));
    ew::Couplings cp = ew::random_couplings(rng);
    ew::Masses m = ew::ew_masses(cp);
    double n = std::sqrt(cp.g * cp.g + cp.gp * cp.gp);
    upd(worst, std::abs(m.mW / m.mZ - cp.g / n));

    ew::Couplings sym_phase = ew::random_couplings(rng, false);
    ew::Masses m0 = ew::ew_masses(sym_phase);
    upd(worst, std::abs(m0.eta0) + std::abs(m0.mW) + std::abs(m0.mZ) +
                   std::abs(m0.mH));
  }
  return worst;
}

// Few-term doublet. The residual U(1) sweep multiplies phi by circle
// factors whose squares do not collapse symbolically, so the term count of
// phi sets the cost of the whole runner.
ew::BareFields slim_bare_fields(SplitMix64& rng) {
  ew::BareFields f = ew::random_bare_fields(rng);
  ExMat p(2, 1);
  p(0, 0) = Expr::constant(rng.dyadic()) * Expr::coordinate(rng.uniform_int(0, 3)) +
            Expr::i() * Expr::constant(rng.dyadic());
  p(1, 0) = Expr::constant(1.0) +
            Expr::constant(0.5 * rng.dyadic()) * Expr::coordinate(rng.uniform_int(0, 3));
  f.phi = form0(p);
  return f;
}

double run_residual_u1(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "ew.residual_u1", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    ew::Couplings cp = ew::random_couplings(rng);
    ew::BareFields f = slim_bare_fields(rng);
    Expr theta = fields::random_poly(rng, 1);
    double n = std::sqrt(cp.g * cp.g + cp.gp * cp.gp);
    double e_em = cp.g * cp.gp / n;

    ew::DressedFields d = ew::dress_ew(f, cp.g, pts);
    ew::PhysicalFields p = ew::weinberg_rotate(d, cp.g, cp.gp);
    MatrixForm idt =
        chart::exterior_d(chart::scalar_form(0, {}, theta)) * Expr::i();

    ew::BareFields fa;
    fa.a = f.a + idt * Expr::constant(1.0 / cp.gp);
    fa.b = f.b;
    fa.phi = f.phi.map_entries(
        [&](const Expr& v) { return v * groups::u1_field(-theta); });
    ew::DressedFields da = ew::dress_ew(fa, cp.g, pts);
    ew::PhysicalFields pa = ew::weinberg_rotate(da, cp.g, cp.gp);

    FieldPair at = ew::alpha_tilde(theta);
    MatrixForm B_tw = gauge::residual_twisted_transform(
                          Connection{d.B * Expr::constant(cp.g), {}}, at)
                          .omega *
                      Expr::constant(1.0 / cp.g);
    upd(worst, maxdiff(da.B, B_tw, pts));

    upd(worst, maxdiff(pa.Z, p.Z, pts));
    upd(worst, maxdiff(pa.A, p.A + idt * Expr::constant(1.0 / e_em), pts));
    upd(worst, maxdiff(pa.Wm, p.Wm * groups::u1_field(Expr::constant(-2.0) * theta), pts));
    upd(worst, maxdiff(pa.Wp, p.Wp * groups::u1_field(Expr::constant(2.0) * theta), pts));
  }
  return worst;
}

// ---- gr ----

double run_metricity(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "gr.metricity", trial));
    auto pts = sample_points(rng, ctx.points);

    FieldPair ed = gr::random_frame(rng, 0);
    gr::Geometry geod{gr::random_lorentz_one_form(rng), gr::coframe_of(ed.value)};
    if (!gr::metricity_residual(gr::dress_gr(geod, ed)).is_structural_zero())
      upd(worst, 1.0);

    FieldPair e = gr::random_frame(rng);
    gr::Geometry geo{gr::random_lorentz_one_form(rng), gr::coframe_of(e.value)};
    upd(worst, maxabs(gr::metricity_residual(gr::dress_gr(geo, e)), pts));
  }
  return worst;
}

double run_palatini(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "gr.palatini", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    FieldPair e = gr::random_frame(rng);
    gr::Geometry geo{gr::random_lorentz_one_form(rng), gr::coframe_of(e.value)};
    chart::Metric m = gr::induced_metric(e);
    gr::Dressed d = gr::dress_gr(geo, e);

    MatrixForm lp = gr::palatini_lagrangian(geo, m);
    double scale = std::max(1.0, maxabs(lp, pts));
    upd(worst, maxdiff(lp, gr::palatini_lagrangian_dressed(d, m), pts) / scale);
    upd(worst, maxdiff(lp, gr::einstein_hilbert_lagrangian(d, m), pts) / scale);
  }
  return worst;
}

double run_lorentz_erasure(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "gr.lorentz_erasure", trial));
    auto pts = sample_points(rng, ctx.points);
    FieldPair e = gr::random_frame(rng);
    gr::Geometry geo{gr::random_lorentz_one_form(rng), gr::coframe_of(e.value)};
    FieldPair S = groups::random_lorentz_field(rng).vector;
    gr::Dressed d = gr::dress_gr(geo, e);
    gr::Dressed ds = gr::dress_gr(gr::lorentz_transform(geo, S),
                                  gr::lorentz_transform_frame(e, S));
    upd(worst, maxdiff(ds.gamma, d.gamma, pts));
    upd(worst, maxdiff(ds.coframe, d.coframe, pts));
    upd(worst, maxdiff(ds.g, d.g, pts));
  }
  return worst;
}

double run_coordinates(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "gr.coordinates", trial));
    auto pts = sample_points(rng, ctx.points);
    FieldPair e = gr::random_frame(rng);
    gr::Geometry geo{gr::random_lorentz_one_form(rng), gr::coframe_of(e.value)};
    gr::Dressed d = gr::dress_gr(geo, e);

    FieldPair G1 = gr::random_jacobian(rng), G2 = gr::random_jacobian(rng);
    gr::Dressed two_step = gr::coordinate_change(gr::coordinate_change(d, G1), G2);
    gr::Dressed one_step = gr::coordinate_change(d, groups::mul(G1, G2));
    upd(worst, maxdiff(two_step.gamma, one_step.gamma, pts));
    upd(worst, maxdiff(two_step.coframe, one_step.coframe, pts));
    upd(worst, maxdiff(two_step.g, one_step.g, pts));
  }
  return worst;
}

// ---- conformal ----

FieldPair conformal_frame(const RunContext& ctx, SplitMix64& rng) {
  if (const auto* j = fixture_with_schema(ctx, "conformal-fixture/1"))
    return conformal::fixture_from_json(*j).e;
  return gr::random_jacobian(rng);
}

double run_boost_constraint(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.boost_constraint", trial));
    auto pts = sample_points(rng, ctx.points);
    FieldPair e = conformal_frame(ctx, rng);
    conformal::Blocks b = random_cartan(rng, e);
    conformal::BoostDressing u1 = conformal::boost_dressing(b, e);
    upd(worst, maxabs(conformal::dress_boost(b, u1).a, pts));
  }
  return worst;
}

double run_boost_invariance(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.boost_invariance", trial));
    auto pts = sample_points(rng, ctx.points);
    FieldPair e = conformal_frame(ctx, rng);
    conformal::Blocks b = random_cartan(rng, e);
    conformal::BoostDressing u1 = conformal::boost_dressing(b, e);
    conformal::Blocks d1 = conformal::dress_boost(b, u1);

    ExMat r(1, 4);
    for (int i = 0; i < 4; ++i) r(0, i) = fields::random_poly(rng, 1);
    auto gamma1 = gauge::make_gauge_map(groups::k1_field(r), GroupKind::K1,
                                        "conformal boost");
    Connection w{conformal::assemble_blocks(b), {}};
    conformal::Blocks bg =
        conformal::split_blocks(gauge::gauge_transform(w, gamma1).omega);
    conformal::Blocks d1g =
        conformal::dress_boost(bg, conformal::boost_dressing(bg, e));
    upd(worst, maxdiff(conformal::assemble_blocks(d1g),
                       conformal::assemble_blocks(d1), pts));
  }
  return worst;
}

double run_residual_weyl(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.residual_weyl", trial));
    auto pts = sample_points(rng, std::min(ctx.points, 6));
    FieldPair e = conformal_frame(ctx, rng);
    conformal::Blocks b = random_cartan(rng, e);
    conformal::Blocks w1 = conformal::dress_boost(b, conformal::boost_dressing(b, e));
    Expr w = fields::random_poly(rng, 2);
    if (const auto* j = fixture_with_schema(ctx, "conformal-fixture/1"))
      w = conformal::fixture_from_json(*j).w;
    conformal::WeylMap zm = conformal::weyl_map(w, e);

    Connection chi{conformal::assemble_blocks(w1), {"conformal boost"}};
    conformal::Blocks generic = conformal::split_blocks(
        gauge::residual_twisted_transform(chi, zm.C).omega);
    conformal::Blocks closed = conformal::residual_weyl_blocks(w1, zm);
    upd(worst, maxabs(generic.a, pts));
    upd(worst, maxdiff(generic.P, closed.P, pts));
    upd(worst, maxdiff(generic.A, closed.A, pts));
    upd(worst, maxdiff(generic.theta, closed.theta, pts));

    MatrixForm phi1 = conformal::random_tractor(rng);
    Section sphi{phi1, {"conformal boost"}};
    upd(worst, maxdiff(gauge::residual_twisted_transform(sphi, zm.C).phi,
                       conformal::residual_weyl_tractor(phi1, zm), pts));
    MatrixForm psi1 = conformal::random_twistor(rng);
    FieldPair cbar = conformal::weyl_spin_map(zm);
    upd(worst, maxdiff(chart::wedge(form0(cbar.inverse), psi1),
                       conformal::residual_weyl_twistor(psi1, zm), pts));
  }
  return worst;
}

double run_pairings(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.pairings", trial));
    auto pts = sample_points(rng, ctx.points);
    FieldPair e = conformal_frame(ctx, rng);
    MatrixForm phi = conformal::random_tractor(rng);
    MatrixForm psi = conformal::random_tractor(rng);
    MatrixForm tw = conformal::random_twistor(rng);
    if (const auto* j = fixture_with_schema(ctx, "conformal-fixture/1")) {
      conformal::Fixture fx = conformal::fixture_from_json(*j);
      phi = fx.tractor;
      tw = fx.twistor;
    }

    groups::LorentzPair S = groups::random_lorentz_field(rng, 1);
    FieldPair emb = conformal::embed_lorentz(S.vector);
    MatrixForm pair0 = conformal::pairing_form(phi, psi);
    upd(worst, maxdiff(conformal::pairing_form(
                           chart::wedge(form0(emb.inverse), phi),
                           chart::wedge(form0(emb.inverse), psi)),
                       pair0, pts));
    FieldPair semb = conformal::embed_lorentz_spin(S.spin);
    MatrixForm h0 = chart::scalar_form(0, {}, conformal::twistor_helicity(tw));
    upd(worst, maxdiff(chart::scalar_form(0, {}, conformal::twistor_helicity(
                                                     chart::wedge(form0(semb.inverse), tw))),
                       h0, pts));

    Expr w = fields::random_poly(rng, 2);
    conformal::WeylMap zm = conformal::weyl_map(w, e);
    upd(worst, maxdiff(conformal::pairing_form(
                           conformal::residual_weyl_tractor(phi, zm),
                           conformal::residual_weyl_tractor(psi, zm)),
                       pair0, pts));
    upd(worst, maxdiff(chart::scalar_form(0, {}, conformal::twistor_helicity(
                                                     conformal::residual_weyl_twistor(tw, zm))),
                       h0, pts));

    conformal::Blocks conn = conformal::random_blocks(rng);
    MatrixForm lhs = chart::exterior_d(conformal::pairing_form(phi, psi));
    MatrixForm rhs =
        conformal::pairing_form(conformal::covariant_d(conn, phi), psi) +
        conformal::pairing_form(phi, conformal::covariant_d(conn, psi));
    upd(worst, maxdiff(lhs, rhs, pts));
  }
  return worst;
}

double run_normal_geometry(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.normal_geometry", trial));
    Expr p = fields::random_poly(rng, 2);
    conformal::NormalGeometry ng = conformal::normal_conformally_flat(p);
    auto pts = sample_points(rng, std::min(ctx.points, 4));

    conformal::Blocks curv = conformal::curvature_blocks(ng.conn);
    if (!curv.theta.is_structural_zero()) upd(worst, 1.0);
    upd(worst, maxabs(curv.a, pts));
    upd(worst, maxabs(gr::ricci_tensor(curv.A), pts));

    ExMat pm = ng.schouten.component({});
    fdo::MatFn gfn = [&](const fdo::Point& x) { return eval_mat(ng.m.g, x); };
    fdo::MatFn pfn = [&](const fdo::Point& x) { return eval_mat(pm, x); };
    for (const auto& x : pts) {
      upd(worst, max_abs(eval_mat(pm, x) - fdo::schouten_fd(gfn, x, 0.01)));
      auto curl = fdo::cov_curl_fd(pfn, gfn, x, 0.01);
      CMat einv = eval_mat(ng.e.inverse, x);
      for (uint8_t mu = 0; mu < 4; ++mu)
        for (uint8_t nu = uint8_t(mu + 1); nu < 4; ++nu) {
          CMat blk = eval_mat(curv.P.component({mu, nu}), x);
          for (int bc = 0; bc < 4; ++bc) {
            cnum expect = 0.0;
            for (int sg = 0; sg < 4; ++sg)
              expect += curl[mu](nu, sg) * einv(sg, bc);
            upd(worst, std::abs(blk(0, bc) - expect));
          }
        }
    }
  }
  return worst;
}

double run_spin_isomorphism(const RunContext& ctx) {
  double worst = 0.0;
  for (int trial = 0; trial < ctx.trials; ++trial) {
    SplitMix64 rng(stream_for(ctx.seed, "conformal.spin_isomorphism", trial));

    CMat X = groups::random_so24_algebra(rng);
    CMat Y = groups::random_so24_algebra(rng);
    upd(worst, groups::algebra_membership_residual(GroupKind::SU22,
                                                   groups::so24_to_su22(X)));
    upd(worst, frob(groups::so24_to_su22(commutator(X, Y)) -
                    commutator(groups::so24_to_su22(X), groups::so24_to_su22(Y))));

    CMat s = groups::random_so13_algebra(rng);
    CMat t = groups::random_so13_algebra(rng);
    CMat Sbar = mat_exp(groups::sl2_of_so13(s));
    CMat Tbar = mat_exp(groups::sl2_of_so13(t));
    upd(worst, frob(groups::spin_cover(Sbar * Tbar) -
                    groups::spin_cover(Sbar) * groups::spin_cover(Tbar)));
    upd(worst, frob(groups::spin_cover(Sbar) - mat_exp(s)));

    CMat xv(4, 1);
    for (int a = 0; a < 4; ++a) xv(a, 0) = rng.range(-2.0, 2.0);
    cnum det = groups::bar_map(xv).det();
    cnum want = xv(0, 0) * xv(0, 0) - xv(1, 0) * xv(1, 0) -
                xv(2, 0) * xv(2, 0) - xv(3, 0) * xv(3, 0);
    upd(worst, std::abs(det - want));
  }
  return worst;
}

std::vector<Property> build_registry() {
  std::vector<Property> reg;
  auto add = [&](std::string id, std::vector<std::string> covers, double tol,
                 std::string statement, std::string fixtures,
                 std::function<double(const RunContext&)> run) {
    std::string suite = id.substr(0, id.find('.'));
    reg.push_back(Property{std::move(id), std::move(suite), std::move(covers),
                           tol, std::move(statement), std::move(fixtures),
                           std::move(run)});
  };

  add("core.composite_invariance", {"invariance"}, 1e-10,
      "Dressed composites chi^u are unchanged under erased-subgroup gauge maps "
      "(two-path comparison) for SU(2), SO(1,3) and K1 dressings.",
      "random SU(2)/Lorentz/K1 group fields, polynomial connections and sections",
      run_composite_invariance);
  add("core.curvature_naturality", {"invariance"}, 1e-9,
      "curvature(omega^u) = u^-1 Omega u and D^u D^u phi^u = Omega^u phi^u.",
      "random SU(2) connections, sections and dressings", run_curvature_naturality);
  add("core.residual_adjoint", {"adjoint-residual"}, 1e-9,
      "For adjoint-compatible dressings the residual action in closed form "
      "(chi^u as a connection/section under gamma) equals the two-path rebuild.",
      "random SU(2) fields; adjoint response u^gamma = gamma^-1 u gamma",
      run_residual_adjoint);
  add("core.residual_twisted", {"twisted-residual"}, 1e-9,
      "For cocycle-compatible dressings the twisted residual action "
      "C(gamma)^-1 chi^u C(gamma) + C(gamma)^-1 dC(gamma) equals the two-path rebuild.",
      "abelian GL(2) cocycle, center U(1) residual maps", run_residual_twisted);
  add("core.twisted_composition", {"twisted-connection"}, 1e-10,
      "Two twisted steps compose through the cocycle: gamma then eta acts as "
      "gamma eta, u -> eta^-1 gamma^-1 u C(gamma eta).",
      "abelian GL(2) cocycle, center U(1) residual maps", run_twisted_composition);
  add("core.cocycle", {"cocycle"}, 1e-10,
      "C(j j') = C(j) B(j)^-1 C(j') B(j) and the pulled-back rule "
      "R_j*A(j') = B(j)^-1 A(j') B(j), for the GL(2) test cocycle and the "
      "chart-dependent Weyl maps C(z), C-bar(z).",
      "random polynomial parameters; frames from unit-shear jacobians",
      run_cocycle);

  add("brst.d_squared", {"brst"}, 1e-14,
      "d(d f) = 0 structurally for random matrix-valued forms of degree 0..2.",
      "random polynomial forms", run_d_squared);
  add("brst.nilpotency", {"brst"}, 1e-8,
      "Two successive variations close on the ghost bracket: "
      "(delta_xi delta_zeta - delta_zeta delta_xi) chi = delta_[xi,zeta] chi.",
      "random su(2) ghosts on connections, curvatures and sections",
      run_nilpotency);
  add("brst.dressed_ghost", {"brst"}, 1e-9,
      "v^u = u^-1 v u + u^-1 (su): erased response gives v^u = 0, adjoint "
      "keeps v^u = v, twisted yields the cocycle ghost c_p(v).",
      "random SU(2) dressings; abelian GL(2) cocycle for the twisted case",
      run_dressed_ghost);
  add("brst.conformal_ghost", {"brst", "example-conformal"}, 1e-9,
      "The conformal composite ghost collapses to the Lorentz ghost plus "
      "c(eps); on the identity frame its top row is exactly the partials of eps.",
      "identity and unit-shear jacobian frames, polynomial ghosts",
      run_conformal_ghost);

  add("ew.lagrangian_equality", {"lagrangian", "example-ew"}, 1e-9,
      "L(a, b, phi) = L(A, W+-, Z0, eta) pointwise after the polar dressing "
      "and the Weinberg rotation.",
      "random broken-phase couplings and smooth bare fields; accepts "
      "ew-fixture/1 files",
      run_lagrangian_equality);
  add("ew.photon_decoupling", {"example-ew"}, 1e-10,
      "No A-Z0 cross terms at W = 0: the mixed parity component of the "
      "dressed Lagrangian vanishes.",
      "random configurations with the charged fields switched off",
      run_photon_decoupling);
  add("ew.mass_ratio", {"example-ew"}, 1e-12,
      "m_W / m_Z = g / sqrt(g^2 + g'^2) in the broken phase; all masses "
      "vanish when mu^2 >= 0.",
      "random couplings in both phases", run_mass_ratio);
  add("ew.residual_u1", {"example-ew", "twisted-residual"}, 1e-9,
      "The residual U(1) acts on the physical variables in closed form: A "
      "shifts abelianly, Z0 is inert, W+- scale by alpha^-+2, B follows the "
      "twisted law through alpha-tilde.",
      "random broken-phase configurations and polynomial angles",
      run_residual_u1);

  add("gr.metricity", {"example-gr"}, 1e-12,
      "d g - Gamma^T g - g Gamma = 0 for the dressed connection; structurally "
      "zero on diagonal frames.",
      "random diagonal and sheared frames", run_metricity);
  add("gr.palatini", {"lagrangian", "example-gr"}, 1e-8,
      "The Palatini form equals its dressed rewrite and the "
      "scalar-curvature form, pointwise relative to the local scale.",
      "random frames and Lorentz connections", run_palatini);
  add("gr.lorentz_erasure", {"invariance", "example-gr"}, 1e-10,
      "Local Lorentz maps are fully erased: (Gamma, dx-coframe, g) rebuilt "
      "from transformed data coincide.",
      "random frames and two-factor Lorentz fields", run_lorentz_erasure);
  add("gr.coordinates", {"example-gr"}, 1e-10,
      "Coordinate changes act on the dressed variables and compose: two "
      "jacobian steps equal their product in one step.",
      "random unit-shear jacobian fields", run_coordinates);

  add("conformal.boost_constraint", {"example-conformal"}, 1e-11,
      "The boost dressing u1 = K1(a e^-1) kills the dilation block: the a "
      "slot of the dressed Cartan connection vanishes.",
      "unit-shear jacobian frames with matching soldering form; accepts "
      "conformal-fixture/1 files",
      run_boost_constraint);
  add("conformal.boost_invariance", {"invariance", "example-conformal"}, 1e-10,
      "The boost-dressed Cartan connection is invariant under K1 gauge maps "
      "(two-path rebuild).",
      "unit-shear jacobian frames; accepts conformal-fixture/1 files",
      run_boost_invariance);
  add("conformal.residual_weyl", {"twisted-residual", "example-conformal"}, 1e-9,
      "Residual Weyl action through C(z): blockwise closed forms, the "
      "tractor column C^-1 phi and the twistor column C-bar^-1 psi all match "
      "the generic twisted machinery.",
      "random Weyl exponents and carriers; accepts conformal-fixture/1 files",
      run_residual_weyl);
  add("conformal.pairings", {"example-conformal"}, 1e-9,
      "The tractor metric and the twistor helicity are invariant under "
      "residual Lorentz and Weyl actions; d<phi,psi> obeys the Leibniz rule "
      "through D1.",
      "random tractors/twistors; accepts conformal-fixture/1 files",
      run_pairings);
  add("conformal.normal_geometry", {"example-conformal"}, 1e-8,
      "The normal connection of a conformally flat metric has zero torsion "
      "and f blocks and trace-free W; its Schouten and Cotton blocks agree "
      "with a finite-difference oracle.",
      "conformal factors exp(2p) with random polynomial p",
      run_normal_geometry);
  add("conformal.spin_isomorphism", {"example-conformal"}, 1e-10,
      "The so(2,4) -> su(2,2) map preserves brackets and lands in su(2,2); "
      "the spin cover is a group morphism; det(bar x) is the Minkowski norm.",
      "random numeric algebra elements", run_spin_isomorphism);

  return reg;
}

}  // namespace

const std::vector<std::string>& required_coverage() {
  static const std::vector<std::string> tags = {
      "invariance",      "adjoint-residual", "twisted-connection",
      "twisted-residual", "cocycle",         "brst",
      "lagrangian",      "example-ew",       "example-gr",
      "example-conformal"};
  return tags;
}

const std::vector<Property>& registry() {
  static const std::vector<Property> reg = build_registry();
  return reg;
}

void check_coverage() {
  std::set<std::string> seen;
  for (const auto& p : registry())
    for (const auto& tag : p.covers) seen.insert(tag);
  for (const auto& tag : required_coverage())
    if (!seen.count(tag))
      throw std::logic_error("property registry does not cover: " + tag);
}

bool known_suite(const std::string& name) {
  static const std::set<std::string> names = {"core", "brst",      "ew",
                                              "gr",   "conformal", "all"};
  return names.count(name) > 0;
}

double round6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return std::strtod(buf, nullptr);
}

Report run_suite(const SuiteConfig& cfg) {
  if (!known_suite(cfg.suite))
    throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.points < 1) throw std::invalid_argument("points must be >= 1");
  for (const auto& [id, tol] : cfg.tol_overrides)
    if (!(tol > 0.0))
      throw std::invalid_argument("tolerance override must be positive: " + id);

  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = cfg.suite;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  rep.points = cfg.points;
  rep.pass = true;

  for (const auto& prop : registry()) {
    if (cfg.suite != "all" && prop.suite != cfg.suite) continue;
    PropertyRecord rec;
    rec.id = prop.id;
    rec.statement = prop.statement;
    rec.trials = cfg.trials;
    rec.tolerance = prop.tolerance;
    if (auto it = cfg.tol_overrides.find(prop.id); it != cfg.tol_overrides.end())
      rec.tolerance = it->second;

    RunContext ctx;
    ctx.seed = cfg.seed;
    ctx.trials = cfg.trials;
    ctx.points = cfg.points;
    ctx.tol = rec.tolerance;
    ctx.fixture = cfg.fixture;
    try {
      rec.max_residual = round6(prop.run(ctx));
      rec.pass = rec.max_residual < rec.tolerance;
    } catch (const std::exception& e) {
      rec.error = e.what();
      rec.pass = false;
      rep.had_error = true;
    }
    rep.pass = rep.pass && rec.pass;
    rep.records.push_back(std::move(rec));
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

nlohmann::json Report::body_json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json p = {{"id", r.id},
                        {"statement", r.statement},
                        {"trials", r.trials},
                        {"max_residual", r.max_residual},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}};
    if (!r.error.empty()) p["error"] = r.error;
    props.push_back(std::move(p));
  }
  return nlohmann::json{{"schema", "dressing-report/1"},
                        {"suite", suite},
                        {"seed", seed},
                        {"config", {{"trials", trials}, {"points", points}}},
                        {"properties", std::move(props)},
                        {"pass", pass},
                        {"had_error", had_error}};
}

nlohmann::json Report::to_json() const {
  nlohmann::json j = body_json();
  j["wall_seconds"] = wall_seconds;
  return j;
}

std::string Report::text() const {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "suite %s  seed %llu  trials %d  points %d\n",
                suite.c_str(), static_cast<unsigned long long>(seed), trials,
                points);
  os << line;
  for (const auto& r : records) {
    if (r.error.empty())
      std::snprintf(line, sizeof(line), "  %-32s %11.6g  tol %8.1g  %s\n",
                    r.id.c_str(), r.max_residual, r.tolerance,
                    r.pass ? "pass" : "FAIL");
    else
      std::snprintf(line, sizeof(line), "  %-32s %11s  tol %8.1g  ERROR %s\n",
                    r.id.c_str(), "-", r.tolerance, r.error.c_str());
    os << line;
  }
  std::snprintf(line, sizeof(line), "%s (%zu properties, %.1fs)\n",
                had_error ? "error" : (pass ? "pass" : "FAIL"), records.size(),
                wall_seconds);
  os << line;
  return os.str();
}

std::vector<std::string> known_ids() {
  std::vector<std::string> ids;
  for (const auto& p : registry()) ids.push_back(p.id);
  return ids;
}

std::string explain(const std::string& property_id) {
  for (const auto& p : registry()) {
    if (p.id != property_id) continue;
    std::ostringstream os;
    os << "id:        " << p.id << "\n"
       << "suite:     " << p.suite << "\n"
       << "statement: " << p.statement << "\n"
       << "fixtures:  " << p.fixtures << "\n"
       << "tolerance: " << p.tolerance << "\n"
       << "covers:    ";
    for (size_t i = 0; i < p.covers.size(); ++i)
      os << (i ? ", " : "") << p.covers[i];
    os << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "unknown property id: " << property_id << "\nvalid ids:\n";
  for (const auto& id : known_ids()) os << "  " << id << "\n";
  throw std::out_of_range(os.str());
}

}  // namespace dressing::harness
