#include "dressing/brst.hpp"

namespace dressing::brst {

using chart::exterior_d;
using chart::form0;
using chart::graded_commutator;
using chart::wedge;

namespace {

ExMat bracket(const ExMat& a, const ExMat& b) { return a * b - b * a; }

double max_over(const MatrixForm& f, const std::vector<std::array<cnum, 4>>& pts) {
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_abs(f, x));
  return worst;
}

}  // namespace

MatrixForm flow_variation(const Connection& c, const ExMat& xi) {
  return exterior_d(form0(xi)) + graded_commutator(c.omega, form0(xi));
}

MatrixForm flow_variation(const TensorForm& t, const ExMat& xi) {
  return graded_commutator(t.value, form0(xi));
}

MatrixForm flow_variation(const Section& s, const ExMat& xi) {
  return -wedge(form0(xi), s.phi);
}

MatrixForm brst_variation(const Connection& c, const ExMat& xi) {
  return -flow_variation(c, xi);
}

MatrixForm brst_variation(const TensorForm& t, const ExMat& xi) {
  return flow_variation(t, xi);
}

MatrixForm brst_variation(const Section& s, const ExMat& xi) {
  return flow_variation(s, xi);
}

double nilpotency_residual(const Connection& omega, const TensorForm& X,
                           const Section& phi, const ExMat& xi, const ExMat& zeta,
                           const std::vector<std::array<cnum, 4>>& pts) {
  ExMat br = bracket(xi, zeta);
  double worst = 0.0;

  // delta_xi(delta_zeta omega) = [delta_xi omega, zeta]
  MatrixForm vx = flow_variation(omega, xi);
  MatrixForm vz = flow_variation(omega, zeta);
  MatrixForm lhs = graded_commutator(vx, form0(zeta)) - graded_commutator(vz, form0(xi));
  MatrixForm rhs = flow_variation(omega, br);
  worst = std::max(worst, max_over(lhs - rhs, pts));

  MatrixForm tx = flow_variation(X, xi);
  MatrixForm tz = flow_variation(X, zeta);
  lhs = graded_commutator(tx, form0(zeta)) - graded_commutator(tz, form0(xi));
  rhs = flow_variation(X, br);
  worst = std::max(worst, max_over(lhs - rhs, pts));

  // delta_xi(delta_zeta phi) = -zeta (delta_xi phi)
  lhs = -wedge(form0(zeta), flow_variation(phi, xi)) +
        wedge(form0(xi), flow_variation(phi, zeta));
  rhs = flow_variation(phi, br);
  worst = std::max(worst, max_over(lhs - rhs, pts));

  return worst;
}

MatrixForm dressing_flow(const GroupField& u, const ExMat& xi, DressingResponse r,
                         const ExMat* c_ghost) {
  MatrixForm xiu = wedge(form0(xi), u.value);
  switch (r) {
    case DressingResponse::Erased:
      return -xiu;
    case DressingResponse::Adjoint:
      return wedge(u.value, form0(xi)) - xiu;
    case DressingResponse::Twisted:
      if (!c_ghost) throw std::invalid_argument("twisted response needs the cocycle ghost");
      return wedge(u.value, form0(*c_ghost)) - xiu;
  }
  throw std::logic_error("unreachable");
}

MatrixForm dressed_ghost(const GroupField& u, const ExMat& xi, const MatrixForm& su) {
  return wedge(u.inverse, wedge(form0(xi), u.value)) + wedge(u.inverse, su);
}

MatrixForm vary_dressed_connection(const Connection& omega, const GroupField& u,
                                   const MatrixForm& domega, const MatrixForm& du) {
  const MatrixForm& ui = u.inverse;
  const MatrixForm& uv = u.value;
  MatrixForm dui = -wedge(ui, wedge(du, ui));  // variation of the inverse
  return wedge(dui, wedge(omega.omega, uv)) + wedge(ui, wedge(domega, uv)) +
         wedge(ui, wedge(omega.omega, du)) + wedge(dui, exterior_d(uv)) +
         wedge(ui, exterior_d(du));
}

MatrixForm vary_dressed_tensor(const TensorForm& X, const GroupField& u,
                               const MatrixForm& dX, const MatrixForm& du) {
  MatrixForm dui = -wedge(u.inverse, wedge(du, u.inverse));
  return wedge(dui, wedge(X.value, u.value)) + wedge(u.inverse, wedge(dX, u.value)) +
         wedge(u.inverse, wedge(X.value, du));
}

MatrixForm vary_dressed_section(const Section& phi, const GroupField& u,
                               const MatrixForm& dphi, const MatrixForm& du) {
  MatrixForm dui = -wedge(u.inverse, wedge(du, u.inverse));
  return wedge(dui, phi.phi) + wedge(u.inverse, dphi);
}

ModifiedBrst modified_brst_check(const Connection& omega, const TensorForm& X,
                                 const Section& phi, const GroupField& u,
                                 const ExMat& xi, DressingResponse r,
                                 const std::vector<std::array<cnum, 4>>& pts,
                                 const ExMat* c_ghost) {
  MatrixForm su = dressing_flow(u, xi, r, c_ghost);
  ModifiedBrst out;
  out.ghost = dressed_ghost(u, xi, su);

  Connection omega_u = gauge::dress(omega, u);
  TensorForm X_u = gauge::dress(X, u);
  Section phi_u = gauge::dress(phi, u);

  MatrixForm lhs = vary_dressed_connection(omega, u, flow_variation(omega, xi), su);
  MatrixForm rhs = exterior_d(out.ghost) + graded_commutator(omega_u.omega, out.ghost);
  out.connection = max_over(lhs - rhs, pts);

  lhs = vary_dressed_tensor(X, u, flow_variation(X, xi), su);
  rhs = graded_commutator(X_u.value, out.ghost);
  out.tensor = max_over(lhs - rhs, pts);

  lhs = vary_dressed_section(phi, u, flow_variation(phi, xi), su);
  rhs = -wedge(out.ghost, phi_u.phi);
  out.section = max_over(lhs - rhs, pts);

  return out;
}

}  // namespace dressing::brst
