#pragma once

// Random smooth field fixtures. Coefficients are dyadic rationals so that
// the identities checked structurally (d^2 = 0, metricity, torsion of the
// normal connection) come out exactly zero in floating point; evaluation
// points are kept in a moderate box so closed-form exponentials stay tame.

#include "dressing/forms.hpp"
#include "dressing/rng.hpp"

namespace dressing::fields {

using chart::Expr;
using chart::MatrixForm;
using sym::cnum;

// Random real polynomial of total degree <= deg in the chart coordinates,
// with dyadic coefficients. With `constant_term` false the polynomial
// vanishes at the origin.
Expr random_poly(SplitMix64& rng, int deg = 2, bool constant_term = true);

// Random evaluation point with coordinates in [-0.4, 0.4].
std::array<cnum, 4> random_point(SplitMix64& rng);

// Random complex scalar field: p(x) + i q(x).
Expr random_complex_poly(SplitMix64& rng, int deg = 2);

// Random matrix-valued p-form with polynomial entries.
MatrixForm random_form(SplitMix64& rng, int deg, int rows, int cols, int poly_deg = 2);

// Random constant complex vectors for evaluating forms against vectors.
std::array<cnum, 4> random_vector(SplitMix64& rng);

}  // namespace dressing::fields
