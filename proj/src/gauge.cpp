#include "dressing/gauge.hpp"

#include <stdexcept>

namespace dressing::gauge {

using chart::exterior_d;
using chart::form0;
using chart::wedge;

namespace {

GroupField make_field(const MatrixForm& value, const MatrixForm& inverse,
                      groups::GroupKind g, MapClass cls, const std::string& label) {
  if (value.deg != 0 || inverse.deg != 0)
    throw std::invalid_argument("group field must be a degree-0 form");
  if (value.rows != value.cols || inverse.rows != value.rows)
    throw std::invalid_argument("group field must be square");
  return GroupField{value, inverse, g, cls, label};
}

void require_gauge(const GroupField& g) {
  if (g.cls != MapClass::Gauge)
    throw std::invalid_argument("gauge_transform needs a gauge map, '" + g.label +
                                "' is a dressing field");
}

void require_dressing(const GroupField& u) {
  if (u.cls != MapClass::Dressing)
    throw std::invalid_argument("dress needs a dressing field, '" + u.label +
                                "' is a gauge map");
}

std::vector<std::string> with_label(std::vector<std::string> erased, const std::string& l) {
  erased.push_back(l);
  return erased;
}

MatrixForm conjugate(const MatrixForm& x, const MatrixForm& inv, const MatrixForm& val) {
  return wedge(inv, wedge(x, val));
}

MatrixForm connection_law(const MatrixForm& omega, const MatrixForm& inv,
                          const MatrixForm& val) {
  return conjugate(omega, inv, val) + wedge(inv, exterior_d(val));
}

}  // namespace

GroupField make_gauge_map(const FieldPair& f, groups::GroupKind g, const std::string& label) {
  return make_field(form0(f.value), form0(f.inverse), g, MapClass::Gauge, label);
}

GroupField make_dressing(const FieldPair& f, groups::GroupKind g, const std::string& label) {
  return make_field(form0(f.value), form0(f.inverse), g, MapClass::Dressing, label);
}

GroupField make_gauge_map(const MatrixForm& value, const MatrixForm& inverse,
                          groups::GroupKind g, const std::string& label) {
  return make_field(value, inverse, g, MapClass::Gauge, label);
}

GroupField make_dressing(const MatrixForm& value, const MatrixForm& inverse,
                         groups::GroupKind g, const std::string& label) {
  return make_field(value, inverse, g, MapClass::Dressing, label);
}

MatrixForm curvature(const Connection& c) {
  return exterior_d(c.omega) + wedge(c.omega, c.omega);
}

MatrixForm covariant_derivative(const Connection& c, const Section& s) {
  return exterior_d(s.phi) + wedge(c.omega, s.phi);
}

Connection gauge_transform(const Connection& c, const GroupField& g) {
  require_gauge(g);
  return Connection{connection_law(c.omega, g.inverse, g.value), c.erased};
}

Section gauge_transform(const Section& s, const GroupField& g) {
  require_gauge(g);
  return Section{wedge(g.inverse, s.phi), s.erased};
}

TensorForm gauge_transform(const TensorForm& t, const GroupField& g) {
  require_gauge(g);
  return TensorForm{conjugate(t.value, g.inverse, g.value), t.erased};
}

Connection dress(const Connection& c, const GroupField& u) {
  require_dressing(u);
  return Connection{connection_law(c.omega, u.inverse, u.value),
                    with_label(c.erased, u.label)};
}

Section dress(const Section& s, const GroupField& u) {
  require_dressing(u);
  return Section{wedge(u.inverse, s.phi), with_label(s.erased, u.label)};
}

TensorForm dress(const TensorForm& t, const GroupField& u) {
  require_dressing(u);
  return TensorForm{conjugate(t.value, u.inverse, u.value),
                    with_label(t.erased, u.label)};
}

double adjoint_compatibility_residual(const GroupField& u, const GroupField& g,
                                      const MatrixForm& u_after,
                                      const std::vector<std::array<cnum, 4>>& pts) {
  MatrixForm res = u_after - conjugate(u.value, g.inverse, g.value);
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_abs(res, x));
  return worst;
}

namespace {

void check_adjoint(const GroupField& u, const GroupField& g, const MatrixForm& u_after,
                   const std::vector<std::array<cnum, 4>>& pts, double tol) {
  double r = adjoint_compatibility_residual(u, g, u_after, pts);
  if (r > tol)
    throw CompatibilityError("dressing '" + u.label +
                             "' is not adjoint-compatible with '" + g.label +
                             "': witness residual " + std::to_string(r));
}

}  // namespace

Connection residual_adjoint_transform(const Connection& chi_u, const GroupField& g,
                                      const GroupField& u, const MatrixForm& u_after,
                                      const std::vector<std::array<cnum, 4>>& pts,
                                      double tol) {
  check_adjoint(u, g, u_after, pts, tol);
  return Connection{connection_law(chi_u.omega, g.inverse, g.value), chi_u.erased};
}

Section residual_adjoint_transform(const Section& chi_u, const GroupField& g,
                                   const GroupField& u, const MatrixForm& u_after,
                                   const std::vector<std::array<cnum, 4>>& pts,
                                   double tol) {
  check_adjoint(u, g, u_after, pts, tol);
  return Section{wedge(g.inverse, chi_u.phi), chi_u.erased};
}

Connection residual_twisted_transform(const Connection& chi_u, const FieldPair& C) {
  MatrixForm val = form0(C.value), inv = form0(C.inverse);
  return Connection{connection_law(chi_u.omega, inv, val), chi_u.erased};
}

Section residual_twisted_transform(const Section& chi_u, const FieldPair& C) {
  return Section{wedge(form0(C.inverse), chi_u.phi), chi_u.erased};
}

TensorForm residual_twisted_transform(const TensorForm& chi_u, const FieldPair& C) {
  return TensorForm{conjugate(chi_u.value, form0(C.inverse), form0(C.value)),
                    chi_u.erased};
}

FieldPair Cocycle::value(const Expr& j) const {
  return groups::mul(spec.A(j), spec.B(j));
}

FieldPair Cocycle::shifted_value(const Expr& j0, const Expr& j) const {
  FieldPair b0 = spec.B(j0);
  FieldPair c = value(j);
  return groups::mul(groups::mul(FieldPair{b0.inverse, b0.value}, c), b0);
}

ExMat Cocycle::ghost(const Expr& eps) const {
  static const std::string t = "__cocycle_flow";
  FieldPair c = value(Expr::parameter(t) * eps);
  ExMat g(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j)
      g(i, j) = c.value(i, j).diff_param(t).subs_param(t, cnum(0.0, 0.0));
  return g;
}

Cocycle make_cocycle(const CocycleSpec& spec) {
  if (!spec.A || !spec.B || !spec.pulled || spec.n <= 0)
    throw std::invalid_argument("cocycle spec needs n, A, B and the pullback rule");
  return Cocycle{spec};
}

double cocycle_identity_residual(const Cocycle& c, const Expr& j1, const Expr& j2,
                                 const std::vector<std::array<cnum, 4>>& pts) {
  // abelian residual group: the product of j1 and j2 is parameter addition
  FieldPair lhs = c.value(j1 + j2);
  FieldPair rhs = groups::mul(c.value(j1), c.shifted_value(j1, j2));
  MatrixForm res = form0(lhs.value) - form0(rhs.value);
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_abs(res, x));
  return worst;
}

double cocycle_pullback_residual(const Cocycle& c, const Expr& j1, const Expr& j2,
                                 const std::vector<std::array<cnum, 4>>& pts) {
  FieldPair lhs = c.spec.pulled(j1, j2);
  FieldPair b = c.spec.B(j2);
  FieldPair rhs = groups::mul(groups::mul(FieldPair{b.inverse, b.value}, c.spec.A(j1)), b);
  MatrixForm res = form0(lhs.value) - form0(rhs.value);
  double worst = 0.0;
  for (const auto& x : pts) worst = std::max(worst, chart::max_component_abs(res, x));
  return worst;
}

}  // namespace dressing::gauge
