#pragma once

// Tetrad gravity: erasing the local Lorentz group with the tetrad itself
// as dressing field. The bare data is a so(1,3)-valued connection A and a
// coframe theta = e dx; dressing with diag(e, 1) turns them into the
// linear connection Gamma, the coordinate coframe and the metric, on which
// only coordinate changes (GL(4) frame changes) still act.

#include "dressing/gauge.hpp"
#include "dressing/rng.hpp"

namespace dressing::gr {

using chart::Expr;
using chart::MatrixForm;
using chart::Metric;
using groups::FieldPair;
using sym::cnum;

struct Geometry {
  MatrixForm A;      // 4x4 so(1,3)-valued 1-form
  MatrixForm theta;  // 4x1 1-form, the coframe
};

struct Dressed {
  MatrixForm gamma;    // e^{-1} A e + e^{-1} de
  MatrixForm coframe;  // e^{-1} theta (= dx when theta = e dx)
  MatrixForm g;        // 0-form e^T eta e
};

// theta = e dx: the mu-component of theta is column mu of e.
MatrixForm coframe_of(const ExMat& e);

// Metric data generated by a frame: g = e^T eta e, the inverse from the
// paired frame inverse, sqrt(-det g) = det e (frames are taken oriented).
Metric induced_metric(const FieldPair& e);

// The 5x5 Cartan connection [[A, theta], [0, 0]] and its inverse split.
MatrixForm assemble_cartan(const Geometry& geo);
Geometry split_cartan(const MatrixForm& w);

Dressed dress_gr(const Geometry& geo, const FieldPair& e);

// x -> x^T m on column-vector forms (m = eta bare, m = g dressed).
MatrixForm vec_transpose(const MatrixForm& x, const MatrixForm& m);

// dg - Gamma^T g - g Gamma, a structural zero for so(1,3)-valued A.
MatrixForm metricity_residual(const Dressed& d);

// -1/(32 pi G) Tr(R ^ *(theta ^ theta^t)), with the transpose taken
// against eta (bare variables) or the induced metric (dressed variables).
MatrixForm palatini_lagrangian(const Geometry& geo, const Metric& m,
                               double newton = 1.0);
MatrixForm palatini_lagrangian_dressed(const Dressed& d, const Metric& m,
                                       double newton = 1.0);

// Ric_{nu sigma} = R^mu_{nu, mu sigma} as a 0-form, and the scalar
// curvature Lagrangian 1/(16 pi G) (Rs / 2) vol_g built from it.
MatrixForm ricci_tensor(const MatrixForm& curv);
MatrixForm einstein_hilbert_lagrangian(const Dressed& d, const Metric& m,
                                       double newton = 1.0);

// Residual action: a GL(4) frame change G acts as an ordinary gauge
// transformation of the dressed geometry.
Dressed coordinate_change(const Dressed& d, const FieldPair& G);

// Lorentz gauge action on the bare data and on the frame (e -> S^{-1} e).
Geometry lorentz_transform(const Geometry& geo, const FieldPair& S);
FieldPair lorentz_transform_frame(const FieldPair& e, const FieldPair& S);

// so(1,3) generator with rows/columns a < b and a random so(1,3)-valued
// 1-form built from them.
ExMat lorentz_generator(int a, int b);
MatrixForm random_lorentz_one_form(SplitMix64& rng, int poly_deg = 1);

// Oriented frame with closed-form inverse: diag(exp f_i) times unit
// shears. With shears = 0 the frame is diagonal and every dressed
// identity cancels symbolically.
FieldPair random_frame(SplitMix64& rng, int shears = 2);

// Linear-in-x jacobian field with unit-determinant factors.
FieldPair random_jacobian(SplitMix64& rng);

}  // namespace dressing::gr
