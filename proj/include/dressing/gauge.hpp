#pragma once

// Core gauge operations on a local chart: connections, sections, curvature,
// gauge transformations, dressing, and the residual transformation laws
// (ordinary/adjoint and twisted through a cocycle map).
//
// A dressing field is deliberately kept distinct from a gauge transformation
// even though the composite formulas look identical: group-valued fields
// carry a class tag, dress() refuses gauge-tagged maps and gauge_transform()
// refuses dressing-tagged ones. Dressed objects remember which symmetry was
// erased.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dressing/groups.hpp"

namespace dressing::gauge {

using chart::Expr;
using chart::MatrixForm;
using groups::FieldPair;
using sym::cnum;

enum class MapClass { Gauge, Dressing };

struct GroupField {
  MatrixForm value;    // degree-0 group-valued field
  MatrixForm inverse;  // exact inverse carried along
  groups::GroupKind group;
  MapClass cls;
  std::string label;
};

GroupField make_gauge_map(const FieldPair& f, groups::GroupKind g, const std::string& label);
GroupField make_dressing(const FieldPair& f, groups::GroupKind g, const std::string& label);
GroupField make_gauge_map(const MatrixForm& value, const MatrixForm& inverse,
                          groups::GroupKind g, const std::string& label);
GroupField make_dressing(const MatrixForm& value, const MatrixForm& inverse,
                         groups::GroupKind g, const std::string& label);

struct Connection {
  MatrixForm omega;  // degree 1
  std::vector<std::string> erased;
};

struct Section {
  MatrixForm phi;  // degree 0
  std::vector<std::string> erased;
};

struct TensorForm {  // transforms by conjugation (curvature and friends)
  MatrixForm value;
  std::vector<std::string> erased;
};

MatrixForm curvature(const Connection& omega);
MatrixForm covariant_derivative(const Connection& omega, const Section& phi);

// Ordinary gauge action. Throws std::invalid_argument on a dressing-tagged map.
Connection gauge_transform(const Connection& c, const GroupField& g);
Section gauge_transform(const Section& s, const GroupField& g);
TensorForm gauge_transform(const TensorForm& t, const GroupField& g);

// Dressing. Same formulas, different semantics; throws on a gauge-tagged map.
Connection dress(const Connection& c, const GroupField& u);
Section dress(const Section& s, const GroupField& u);
TensorForm dress(const TensorForm& t, const GroupField& u);

// Max residual of u_after - g^{-1} u g over the sample points: the witness
// that u responds to the residual gauge map g in the adjoint way. u_after is
// the dressing rebuilt from the g-transformed underlying fields.
double adjoint_compatibility_residual(const GroupField& u, const GroupField& g,
                                      const MatrixForm& u_after,
                                      const std::vector<std::array<cnum, 4>>& pts);

// Residual action of an adjoint-compatible dressing: ordinary gauge law.
// Refuses (throws CompatibilityError) when the witness residual exceeds tol.
struct CompatibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Connection residual_adjoint_transform(const Connection& chi_u, const GroupField& g,
                                      const GroupField& u, const MatrixForm& u_after,
                                      const std::vector<std::array<cnum, 4>>& pts,
                                      double tol = 1e-6);
Section residual_adjoint_transform(const Section& chi_u, const GroupField& g,
                                   const GroupField& u, const MatrixForm& u_after,
                                   const std::vector<std::array<cnum, 4>>& pts,
                                   double tol = 1e-6);

// Twisted residual action through a map C (values in the larger group):
//   connection: C^{-1} omega C + C^{-1} dC, section: C^{-1} phi,
//   tensor: C^{-1} X C.
Connection residual_twisted_transform(const Connection& chi_u, const FieldPair& C);
Section residual_twisted_transform(const Section& chi_u, const FieldPair& C);
TensorForm residual_twisted_transform(const TensorForm& chi_u, const FieldPair& C);

// Abelian one-parameter cocycles C_p(j) = A_p(j) B(j). The abelian residual
// group element j is represented by its parameter field (the angle for U(1),
// the logarithm for Weyl rescalings); the group product is parameter
// addition. B is a plain morphism, A_p carries the point dependence, and
// pulled(j', j) realizes the action of j on the base within A:
// R_j* A_p(j') = A_{p j}(j').
struct CocycleSpec {
  int n = 0;
  std::function<FieldPair(const Expr&)> A;
  std::function<FieldPair(const Expr&)> B;
  std::function<FieldPair(const Expr&, const Expr&)> pulled;
};

struct Cocycle {
  CocycleSpec spec;

  FieldPair value(const Expr& j) const;  // C_p(j) = A_p(j) B(j)
  // C_{p j0}(j) = B(j0)^{-1} C_p(j) B(j0)
  FieldPair shifted_value(const Expr& j0, const Expr& j) const;
  // c_p(eps) = d/dt at 0 of C_p(t eps), the ghost of the cocycle
  ExMat ghost(const Expr& eps) const;
};

Cocycle make_cocycle(const CocycleSpec& spec);

// Residual of the defining identity C_p(j j') = C_p(j) C_{p j}(j').
double cocycle_identity_residual(const Cocycle& c, const Expr& j1, const Expr& j2,
                                 const std::vector<std::array<cnum, 4>>& pts);
// Residual of R_j* A_p(j') = B(j)^{-1} A_p(j') B(j).
double cocycle_pullback_residual(const Cocycle& c, const Expr& j1, const Expr& j2,
                                 const std::vector<std::array<cnum, 4>>& pts);

}  // namespace dressing::gauge
