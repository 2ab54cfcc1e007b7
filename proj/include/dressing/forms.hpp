#pragma once

// Matrix-valued differential forms on a 4-dimensional chart, stored by
// strictly increasing index tuples with symbolic matrix components. Degree 0
// forms are plain matrix fields. The exterior derivative, wedge product,
// graded commutator, Hodge star and pointwise evaluation live here.

#include <array>
#include <cstdint>
#include <functional>
#include <map>

#include <json.hpp>

#include "dressing/matrix.hpp"

namespace dressing::chart {

using sym::cnum;
using sym::Expr;

using Idx = std::vector<uint8_t>;  // strictly increasing coordinate indices

struct MatrixForm {
  int deg = 0;
  int rows = 0, cols = 0;
  std::map<Idx, ExMat> comp;  // absent key = zero component

  MatrixForm() = default;
  MatrixForm(int degree, int r, int c) : deg(degree), rows(r), cols(c) {}

  bool is_structural_zero() const;
  void set(const Idx& I, ExMat m);          // drops all-zero components
  ExMat component(const Idx& I) const;      // zero matrix when absent

  MatrixForm operator+(const MatrixForm& o) const;
  MatrixForm operator-(const MatrixForm& o) const;
  MatrixForm operator-() const;
  MatrixForm operator*(const Expr& s) const;

  MatrixForm transpose() const;
  MatrixForm conj() const;
  MatrixForm map_entries(const std::function<Expr(const Expr&)>& f) const;

  // Applies a linear map to each matrix component (e.g. a Lie algebra
  // isomorphism applied entrywise to an algebra-valued form).
  MatrixForm map_components(const std::function<ExMat(const ExMat&)>& f,
                            int new_rows, int new_cols) const;

  nlohmann::json to_json() const;
  static MatrixForm from_json(const nlohmann::json& j);
};

// A degree-0 form wrapping a plain matrix field.
MatrixForm form0(const ExMat& m);
// A scalar (1x1) form of the given degree with a single component.
MatrixForm scalar_form(int deg, const Idx& I, const Expr& e);
// The (i, j) entry of each component as a 1x1 form.
MatrixForm entry_form(const MatrixForm& f, int i, int j);
// Componentwise matrix trace as a 1x1 form.
MatrixForm trace_form(const MatrixForm& f);
// s * identity with s a 1x1 form.
MatrixForm scalar_times_identity(const MatrixForm& s, int n);

MatrixForm exterior_d(const MatrixForm& f);
MatrixForm wedge(const MatrixForm& f, const MatrixForm& g);
MatrixForm graded_commutator(const MatrixForm& f, const MatrixForm& g);

struct Metric {
  ExMat g;        // 4x4 symmetric, Lorentzian signature (+,-,-,-)
  ExMat ginv;
  Expr sqrt_det;  // sqrt(-det g)
};

Metric make_metric(const ExMat& g);
Metric minkowski();
ExMat minkowski_eta();

MatrixForm hodge(const MatrixForm& f, const Metric& m);
MatrixForm volume_form(const Metric& m);

CMat evaluate(const MatrixForm& f, const std::array<cnum, 4>& x,
              const std::vector<std::array<cnum, 4>>& vectors,
              const std::map<std::string, cnum>& params = {});

// Every entry replaced by its (constant) value at x. Algebra on frozen
// forms is cheap, which keeps pointwise identity checks on large
// composites affordable.
MatrixForm freeze_form(const MatrixForm& f, const std::array<cnum, 4>& x,
                       const std::map<std::string, cnum>& params = {});

// Componentwise evaluation: max |entries| over all components at a point.
double max_component_abs(const MatrixForm& f, const std::array<cnum, 4>& x,
                         const std::map<std::string, cnum>& params = {});
double max_component_diff(const MatrixForm& a, const MatrixForm& b,
                          const std::array<cnum, 4>& x,
                          const std::map<std::string, cnum>& params = {});

}  // namespace dressing::chart
