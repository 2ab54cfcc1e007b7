#pragma once

// Shared random fixtures for the unit tests. Group-valued fields are built
// from elementary closed-form factors so the symbolic entries stay small.

#include "dressing/gauge.hpp"
#include "dressing/random_fields.hpp"

namespace testfix {

using namespace dressing;
using chart::Expr;
using chart::MatrixForm;
using groups::FieldPair;
using sym::cnum;

inline MatrixForm su2_one_form(SplitMix64& rng, int poly_deg = 1) {
  MatrixForm w(1, 2, 2);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(2, 2);
    for (int k = 1; k <= 3; ++k)
      m = m + groups::epauli(k) * (Expr::i() * fields::random_poly(rng, poly_deg));
    w.set({mu}, m);
  }
  return w;
}

inline ExMat su2_algebra_field(SplitMix64& rng, int poly_deg = 1) {
  ExMat m(2, 2);
  for (int k = 1; k <= 3; ++k)
    m = m + groups::epauli(k) * (Expr::i() * fields::random_poly(rng, poly_deg));
  return m;
}

inline FieldPair random_su2(SplitMix64& rng) {
  int a1 = rng.uniform_int(1, 3), a2 = rng.uniform_int(1, 3);
  return groups::mul(groups::sl2_rotation(a1, fields::random_poly(rng, 1)),
                     groups::sl2_rotation(a2, fields::random_poly(rng, 1)));
}

inline FieldPair inverse_pair(const FieldPair& f) { return FieldPair{f.inverse, f.value}; }

inline std::vector<std::array<cnum, 4>> sample_points(SplitMix64& rng, int n) {
  std::vector<std::array<cnum, 4>> pts;
  for (int i = 0; i < n; ++i) pts.push_back(fields::random_point(rng));
  return pts;
}

inline double maxdiff(const MatrixForm& a, const MatrixForm& b,
                      const std::vector<std::array<cnum, 4>>& pts) {
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_diff(a, b, x));
  return worst;
}

inline double maxabs(const MatrixForm& a, const std::vector<std::array<cnum, 4>>& pts) {
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_abs(a, x));
  return worst;
}

// Abelian cocycle on GL(2): A_p(t) upper unipotent with a point-dependent
// slope, B(t) = diag(e^{it}, 1), the residual parameter scaling the slope
// datum by e^{-it}.
inline gauge::Cocycle test_cocycle(const Expr& slope) {
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

// U(1) embedded in the center of GL(2).
inline FieldPair center_u1(const Expr& t) {
  return FieldPair{ExMat::identity(2) * groups::u1_field(t),
                   ExMat::identity(2) * groups::u1_field(-t)};
}

}  // namespace testfix
