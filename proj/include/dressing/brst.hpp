#pragma once

// BRST variations along a ghost field, their nilpotency, and the dressed
// (composite) ghost. Two conventions live side by side: flow_variation is the
// t-derivative at 0 of the transformed object along exp(t xi); the BRST
// operator differs from it by (-1)^degree. Nilpotency is phrased through the
// commutator of two parametrized variations matching the variation along the
// matrix bracket of the ghosts.

#include "dressing/gauge.hpp"

namespace dressing::brst {

using chart::Expr;
using chart::MatrixForm;
using gauge::Connection;
using gauge::GroupField;
using gauge::Section;
using gauge::TensorForm;
using sym::cnum;

// d/dt at 0 of the object transformed by exp(t xi); xi an algebra-valued
// matrix field.
MatrixForm flow_variation(const Connection& c, const ExMat& xi);   // d xi + [omega, xi]
MatrixForm flow_variation(const TensorForm& t, const ExMat& xi);   // [X, xi]
MatrixForm flow_variation(const Section& s, const ExMat& xi);      // -xi phi

// BRST operator: s = (-1)^deg * flow.
MatrixForm brst_variation(const Connection& c, const ExMat& xi);   // -d xi - [omega, xi]
MatrixForm brst_variation(const TensorForm& t, const ExMat& xi);   // [X, xi]
MatrixForm brst_variation(const Section& s, const ExMat& xi);      // -xi phi

// Max over the points of |(delta_xi delta_zeta - delta_zeta delta_xi) chi
// - delta_[xi,zeta] chi| for the three kinds of chi at once.
double nilpotency_residual(const Connection& omega, const TensorForm& X,
                           const Section& phi, const ExMat& xi, const ExMat& zeta,
                           const std::vector<std::array<cnum, 4>>& pts);

// How the dressing responds to an infinitesimal gauge transformation.
enum class DressingResponse { Erased, Adjoint, Twisted };

// su for the three response classes; c_ghost is the cocycle ghost c_p(xi)
// and is only consulted for the twisted class.
MatrixForm dressing_flow(const GroupField& u, const ExMat& xi, DressingResponse r,
                         const ExMat* c_ghost = nullptr);

// v^u = u^{-1} xi u + u^{-1} su.
MatrixForm dressed_ghost(const GroupField& u, const ExMat& xi, const MatrixForm& su);

// Variation of the dressed composites by the product rule, given the
// variations of the bare object and of the dressing.
MatrixForm vary_dressed_connection(const Connection& omega, const GroupField& u,
                                   const MatrixForm& domega, const MatrixForm& du);
MatrixForm vary_dressed_tensor(const TensorForm& X, const GroupField& u,
                               const MatrixForm& dX, const MatrixForm& du);
MatrixForm vary_dressed_section(const Section& phi, const GroupField& u,
                                const MatrixForm& dphi, const MatrixForm& du);

// Residuals of the modified variations: the dressed composites respond to
// the ghost only through v^u:
//   delta(omega^u) = dv + [omega^u, v]
//   delta(X^u)     = [X^u, v]
//   delta(phi^u)   = -v phi^u
struct ModifiedBrst {
  double connection = 0.0;
  double tensor = 0.0;
  double section = 0.0;
  MatrixForm ghost;  // v^u
};

ModifiedBrst modified_brst_check(const Connection& omega, const TensorForm& X,
                                 const Section& phi, const GroupField& u,
                                 const ExMat& xi, DressingResponse r,
                                 const std::vector<std::array<cnum, 4>>& pts,
                                 const ExMat* c_ghost = nullptr);

}  // namespace dressing::brst
