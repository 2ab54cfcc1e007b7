#pragma once

// The electroweak sector: SU(2) erasure through the polar dressing built
// from the scalar doublet, the residual U(1) structure (Weinberg rotation,
// W/Z/photon variables), both Lagrangian forms and the mass spectrum.
//
// Conventions: a is u(1)-valued (i x real) and b su(2)-valued, with the
// couplings appearing in the covariant derivative D phi = d phi +
// (g' a + g b) phi, so a transforms with (1/g') alpha^{-1} d alpha and b
// with (1/g) beta^{-1} d beta.

#include "dressing/gauge.hpp"
#include "dressing/rng.hpp"

namespace dressing::ew {

using chart::Expr;
using chart::MatrixForm;
using groups::FieldPair;
using sym::cnum;

struct Couplings {
  double g = 0.0;     // SU(2)
  double gp = 0.0;    // U(1)
  double mu2 = 0.0;   // scalar potential, mass term
  double lambda = 0.0;
};

struct BareFields {
  MatrixForm a;    // 1x1 degree-1
  MatrixForm b;    // 2x2 degree-1, su(2)-valued
  MatrixForm phi;  // 2x1 degree-0 doublet
};

struct DressedFields {
  MatrixForm a;   // untouched by the SU(2) dressing
  MatrixForm B;   // u^{-1} b u + (1/g) u^{-1} du
  Expr eta;       // |phi|, the invariant scalar
  FieldPair u;    // the polar dressing
};

struct PhysicalFields {
  MatrixForm A, Z;    // 1x1: photon and neutral weak field
  MatrixForm Wm, Wp;  // 1x1: charged weak fields
  Expr eta;
};

// The scalar doublet vanishes (numerically) at a probe point, so the polar
// dressing is undefined there.
struct DegenerateVacuum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |phi| as a symbolic field.
Expr phi_norm(const MatrixForm& phi);

// Polar decomposition phi = u (0, |phi|)^T with u in SU(2). Throws
// DegenerateVacuum when |phi| < tol at one of the probe points.
FieldPair polar_dressing(const MatrixForm& phi,
                         const std::vector<std::array<cnum, 4>>& probe,
                         double tol = 1e-12);

DressedFields dress_ew(const BareFields& f, double g,
                       const std::vector<std::array<cnum, 4>>& probe);

// A = cos A + sin B3 rotation of the (a, B3) doublet; W-+ read off B.
PhysicalFields weinberg_rotate(const DressedFields& d, double g, double gp);

// tilde alpha = diag(alpha, alpha^{-1}), the value of the residual twisted
// map on the dressing: u^alpha = u tilde-alpha.
FieldPair alpha_tilde(const Expr& theta);

// The residual U(1) action as a cocycle C(alpha) = tilde-alpha (the
// point-independent part is trivial); parameters are the U(1) angles.
gauge::Cocycle residual_cocycle();

// L(a, b, phi) = 1/2 Tr(F ^ *F) + <D phi, *D phi> - U(|phi|) vol on the
// Minkowski chart.
MatrixForm ew_lagrangian(const BareFields& f, const Couplings& c);

// The same theory in the SU(2)-invariant variables, as an explicit sum of
// interaction terms.
MatrixForm ew_lagrangian_dressed(const PhysicalFields& p, const Couplings& c);

// The fields entering the dressed Lagrangian with their exterior
// derivatives, prepared once. assemble_dressed() on them reproduces
// ew_lagrangian_dressed(); dressed_value() freezes them at a point first,
// so sweeps over many points or configurations stay fast.
struct DressedPieces {
  MatrixForm A, dA, Z, dZ, Wm, dWm, Wp, dWp, eta, deta;  // eta as a 0-form
};
DressedPieces make_pieces(const PhysicalFields& p);
MatrixForm assemble_dressed(const DressedPieces& q, const Couplings& c);
cnum dressed_value(const DressedPieces& q, const Couplings& c,
                   const std::array<cnum, 4>& x);

struct Masses {
  double eta0 = 0.0;
  double mW = 0.0;
  double mZ = 0.0;
  double mH = 0.0;
};

// Vacuum and mass spectrum: all zero in the symmetric phase (mu2 >= 0),
// otherwise eta0 = sqrt(-mu2 / 2 lambda), mW = eta0 g,
// mZ = eta0 sqrt(g^2 + g'^2), mH = eta0 2 lambda.
Masses ew_masses(const Couplings& c);

// Random configuration with the doublet bounded away from zero on the chart.
BareFields random_bare_fields(SplitMix64& rng);
Couplings random_couplings(SplitMix64& rng, bool broken_phase = true);

nlohmann::json fixture_to_json(const BareFields& f, const Couplings& c);
void fixture_from_json(const nlohmann::json& j, BareFields* f, Couplings* c);

}  // namespace dressing::ew
