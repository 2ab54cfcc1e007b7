#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dressing/brst.hpp"
#include "fixtures.hpp"

using namespace dressing;
using namespace testfix;
using chart::Expr;
using chart::MatrixForm;
using gauge::Connection;
using gauge::Section;
using gauge::TensorForm;
using groups::FieldPair;
using sym::cnum;

namespace {

// One-parameter family g_t = exp(t xi) built from closed-form factors, with
// the generator xi recovered exactly.
struct Flow {
  FieldPair g;  // entries depend on the parameter "t"
  ExMat xi;
};

Flow su2_flow(SplitMix64& rng) {
  Expr t = Expr::parameter("t");
  int a1 = rng.uniform_int(1, 3), a2 = rng.uniform_int(1, 3);
  Expr p1 = fields::random_poly(rng, 1), p2 = fields::random_poly(rng, 1);
  FieldPair g = groups::mul(groups::sl2_rotation(a1, t * p1),
                            groups::sl2_rotation(a2, t * p2));
  ExMat xi = groups::epauli(a1) * (Expr::i() * Expr::rational(1, 2) * p1) +
             groups::epauli(a2) * (Expr::i() * Expr::rational(1, 2) * p2);
  return Flow{g, xi};
}

MatrixForm d_dt_at_zero(const MatrixForm& f) {
  return f.map_entries([](const Expr& e) {
    return e.diff_param("t").subs_param("t", cnum(0.0, 0.0));
  });
}

MatrixForm central_difference(const MatrixForm& f, double h) {
  MatrixForm hi = f.map_entries([&](const Expr& e) { return e.subs_param("t", cnum(h, 0.0)); });
  MatrixForm lo = f.map_entries([&](const Expr& e) { return e.subs_param("t", cnum(-h, 0.0)); });
  return (hi - lo) * Expr::constant(1.0 / (2.0 * h));
}

}  // namespace

TEST_CASE("flow variation matches the exact derivative of the transformed object") {
  SplitMix64 rng(61);
  auto pts = sample_points(rng, 5);

  Connection omega{su2_one_form(rng), {}};
  Section phi{fields::random_form(rng, 0, 2, 1), {}};
  TensorForm F{gauge::curvature(omega), {}};

  Flow fl = su2_flow(rng);
  auto g = gauge::make_gauge_map(fl.g, groups::GroupKind::SU2, "flow");

  MatrixForm conn_t = gauge::gauge_transform(omega, g).omega;
  CHECK(maxdiff(d_dt_at_zero(conn_t), brst::flow_variation(omega, fl.xi), pts) < 1e-10);

  MatrixForm sec_t = gauge::gauge_transform(phi, g).phi;
  CHECK(maxdiff(d_dt_at_zero(sec_t), brst::flow_variation(phi, fl.xi), pts) < 1e-10);

  MatrixForm ten_t = gauge::gauge_transform(F, g).value;
  CHECK(maxdiff(d_dt_at_zero(ten_t), brst::flow_variation(F, fl.xi), pts) < 1e-10);

  // independent finite-difference oracle for the same derivative
  CHECK(maxdiff(central_difference(conn_t, 1e-5),
                brst::flow_variation(omega, fl.xi), pts) < 1e-7);
  CHECK(maxdiff(central_difference(sec_t, 1e-5),
                brst::flow_variation(phi, fl.xi), pts) < 1e-7);
}

TEST_CASE("brst signs: s = (-1)^degree times the flow derivative") {
  SplitMix64 rng(67);
  auto pts = sample_points(rng, 4);

  Connection omega{su2_one_form(rng), {}};
  Section phi{fields::random_form(rng, 0, 2, 1), {}};
  TensorForm F{gauge::curvature(omega), {}};
  ExMat xi = su2_algebra_field(rng);

  CHECK(maxdiff(brst::brst_variation(omega, xi), -brst::flow_variation(omega, xi), pts) <
        1e-14);
  CHECK(maxdiff(brst::brst_variation(phi, xi), brst::flow_variation(phi, xi), pts) < 1e-14);
  CHECK(maxdiff(brst::brst_variation(F, xi), brst::flow_variation(F, xi), pts) < 1e-14);

  // spelled out: s omega = -d xi - [omega, xi], s phi = -xi phi
  MatrixForm explicit_conn =
      -chart::exterior_d(chart::form0(xi)) - chart::graded_commutator(omega.omega, chart::form0(xi));
  CHECK(maxdiff(brst::brst_variation(omega, xi), explicit_conn, pts) < 1e-14);
  CHECK(maxdiff(brst::brst_variation(phi, xi), -chart::wedge(chart::form0(xi), phi.phi), pts) <
        1e-14);
}

TEST_CASE("variation commutator closes on the ghost bracket") {
  SplitMix64 rng(71);
  auto pts = sample_points(rng, 5);

  for (int trial = 0; trial < 3; ++trial) {
    Connection omega{su2_one_form(rng), {}};
    Section phi{fields::random_form(rng, 0, 2, 1), {}};
    TensorForm F{gauge::curvature(omega), {}};
    ExMat xi = su2_algebra_field(rng);
    ExMat zeta = su2_algebra_field(rng);

    CHECK(brst::nilpotency_residual(omega, F, phi, xi, zeta, pts) < 1e-8);
  }
}

TEST_CASE("dressed ghost: erased symmetry leaves no ghost") {
  SplitMix64 rng(73);
  auto pts = sample_points(rng, 5);

  auto u = gauge::make_dressing(random_su2(rng), groups::GroupKind::SU2, "SU(2)");
  ExMat xi = su2_algebra_field(rng);

  MatrixForm su = brst::dressing_flow(u, xi, brst::DressingResponse::Erased);
  MatrixForm v = brst::dressed_ghost(u, xi, su);
  CHECK(maxabs(v, pts) < 1e-9);
}

TEST_CASE("dressed ghost: adjoint response keeps the ghost") {
  SplitMix64 rng(79);
  auto pts = sample_points(rng, 5);

  auto u = gauge::make_dressing(random_su2(rng), groups::GroupKind::SU2, "SU(2)");
  ExMat xi = su2_algebra_field(rng);

  MatrixForm su = brst::dressing_flow(u, xi, brst::DressingResponse::Adjoint);
  MatrixForm v = brst::dressed_ghost(u, xi, su);
  CHECK(maxdiff(v, chart::form0(xi), pts) < 1e-9);
}

TEST_CASE("dressed ghost: twisted response yields the cocycle ghost") {
  SplitMix64 rng(83);
  auto pts = sample_points(rng, 5);

  auto C = test_cocycle(fields::random_poly(rng, 1));
  Expr eps = fields::random_poly(rng, 1);
  ExMat c = C.ghost(eps);

  // the cocycle ghost of the test cocycle in closed form
  ExMat expected(2, 2);
  expected(0, 0) = Expr::i() * eps;
  expected(0, 1) = C.spec.A(eps).value(0, 1);
  CHECK(maxdiff(chart::form0(c), chart::form0(expected), pts) < 1e-12);

  auto u = gauge::make_dressing(groups::sl2_rotation(1, fields::random_poly(rng, 1)),
                                groups::GroupKind::SU2, "twisted");
  ExMat xi = ExMat::identity(2) * (Expr::i() * eps);  // center U(1) direction

  MatrixForm su = brst::dressing_flow(u, xi, brst::DressingResponse::Twisted, &c);
  MatrixForm v = brst::dressed_ghost(u, xi, su);
  CHECK(maxdiff(v, chart::form0(c), pts) < 1e-9);
}

TEST_CASE("modified variations act through the dressed ghost only") {
  SplitMix64 rng(89);
  auto pts = sample_points(rng, 4);

  Connection omega{su2_one_form(rng), {}};
  Section phi{fields::random_form(rng, 0, 2, 1), {}};
  TensorForm F{gauge::curvature(omega), {}};

  SUBCASE("erased") {
    auto u = gauge::make_dressing(random_su2(rng), groups::GroupKind::SU2, "SU(2)");
    ExMat xi = su2_algebra_field(rng);
    auto r = brst::modified_brst_check(omega, F, phi, u, xi,
                                       brst::DressingResponse::Erased, pts);
    CHECK(r.connection < 1e-9);
    CHECK(r.tensor < 1e-9);
    CHECK(r.section < 1e-9);
    CHECK(maxabs(r.ghost, pts) < 1e-10);
  }

  SUBCASE("adjoint") {
    auto u = gauge::make_dressing(random_su2(rng), groups::GroupKind::SU2, "SU(2)");
    ExMat xi = su2_algebra_field(rng);
    auto r = brst::modified_brst_check(omega, F, phi, u, xi,
                                       brst::DressingResponse::Adjoint, pts);
    CHECK(r.connection < 1e-9);
    CHECK(r.tensor < 1e-9);
    CHECK(r.section < 1e-9);
    CHECK(maxdiff(r.ghost, chart::form0(xi), pts) < 1e-10);
  }

  SUBCASE("twisted") {
    auto C = test_cocycle(fields::random_poly(rng, 1));
    Expr eps = fields::random_poly(rng, 1);
    ExMat c = C.ghost(eps);
    auto u = gauge::make_dressing(groups::sl2_rotation(2, fields::random_poly(rng, 1)),
                                  groups::GroupKind::SU2, "twisted");
    ExMat xi = ExMat::identity(2) * (Expr::i() * eps);
    auto r = brst::modified_brst_check(omega, F, phi, u, xi,
                                       brst::DressingResponse::Twisted, pts, &c);
    CHECK(r.connection < 1e-9);
    CHECK(r.tensor < 1e-9);
    CHECK(r.section < 1e-9);
    CHECK(maxdiff(r.ghost, chart::form0(c), pts) < 1e-10);
  }
}
