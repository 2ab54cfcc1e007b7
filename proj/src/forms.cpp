#include "dressing/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace dressing::chart {

namespace {

bool mat_is_zero(const ExMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Inserts idx into the increasing tuple I; returns the permutation sign and
// writes the merged tuple, or returns 0 when idx already occurs.
int insert_index(const Idx& I, uint8_t idx, Idx* out) {
  int pos = 0;
  for (uint8_t v : I) {
    if (v == idx) return 0;
    if (v < idx) ++pos;
  }
  out->clear();
  out->insert(out->end(), I.begin(), I.begin() + pos);
  out->push_back(idx);
  out->insert(out->end(), I.begin() + pos, I.end());
  return (pos % 2 == 0) ? 1 : -1;
}

// Sign of merging two disjoint increasing tuples into one increasing tuple,
// or 0 if they intersect.
int merge_sign(const Idx& I, const Idx& J, Idx* out) {
  out->clear();
  int sign = 1;
  size_t i = 0, j = 0;
  while (i < I.size() && j < J.size()) {
    if (I[i] == J[j]) return 0;
    if (I[i] < J[j]) {
      out->push_back(I[i++]);
    } else {
      // J[j] jumps over the remaining entries of I
      if ((I.size() - i) % 2 == 1) sign = -sign;
      out->push_back(J[j++]);
    }
  }
  while (i < I.size()) out->push_back(I[i++]);
  while (j < J.size()) out->push_back(J[j++]);
  return sign;
}

}  // namespace

bool MatrixForm::is_structural_zero() const { return comp.empty(); }

void MatrixForm::set(const Idx& I, ExMat m) {
  if (int(I.size()) != deg) throw std::invalid_argument("component index arity mismatch");
  if (mat_is_zero(m))
    comp.erase(I);
  else
    comp[I] = std::move(m);
}

ExMat MatrixForm::component(const Idx& I) const {
  auto it = comp.find(I);
  if (it != comp.end()) return it->second;
  return ExMat(rows, cols);
}

MatrixForm MatrixForm::operator+(const MatrixForm& o) const {
  if (deg != o.deg || rows != o.rows || cols != o.cols)
    throw std::invalid_argument("form shape mismatch in addition");
  MatrixForm r(deg, rows, cols);
  for (const auto& [I, m] : comp) r.comp[I] = m;
  for (const auto& [I, m] : o.comp) {
    auto it = r.comp.find(I);
    if (it == r.comp.end())
      r.comp[I] = m;
    else {
      it->second = it->second + m;
      if (mat_is_zero(it->second)) r.comp.erase(it);
    }
  }
  return r;
}

MatrixForm MatrixForm::operator-() const {
  MatrixForm r(deg, rows, cols);
  for (const auto& [I, m] : comp) r.comp[I] = -m;
  return r;
}

MatrixForm MatrixForm::operator-(const MatrixForm& o) const { return *this + (-o); }

MatrixForm MatrixForm::operator*(const Expr& s) const {
  MatrixForm r(deg, rows, cols);
  if (s.is_zero()) return r;
  for (const auto& [I, m] : comp) {
    ExMat sm = m * s;
    if (!mat_is_zero(sm)) r.comp[I] = std::move(sm);
  }
  return r;
}

MatrixForm MatrixForm::transpose() const {
  MatrixForm r(deg, cols, rows);
  for (const auto& [I, m] : comp) r.comp[I] = m.transpose();
  return r;
}

MatrixForm MatrixForm::conj() const {
  MatrixForm r(deg, rows, cols);
  for (const auto& [I, m] : comp) r.comp[I] = m.conj();
  return r;
}

MatrixForm MatrixForm::map_entries(const std::function<Expr(const Expr&)>& f) const {
  MatrixForm r(deg, rows, cols);
  for (const auto& [I, m] : comp) {
    ExMat nm(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) nm(i, j) = f(m(i, j));
    if (!mat_is_zero(nm)) r.comp[I] = std::move(nm);
  }
  return r;
}

MatrixForm MatrixForm::map_components(const std::function<ExMat(const ExMat&)>& f,
                                      int new_rows, int new_cols) const {
  MatrixForm r(deg, new_rows, new_cols);
  for (const auto& [I, m] : comp) {
    ExMat nm = f(m);
    if (!mat_is_zero(nm)) r.comp[I] = std::move(nm);
  }
  return r;
}

MatrixForm form0(const ExMat& m) {
  MatrixForm f(0, m.rows(), m.cols());
  f.set({}, m);
  return f;
}

MatrixForm scalar_form(int deg, const Idx& I, const Expr& e) {
  MatrixForm f(deg, 1, 1);
  ExMat m(1, 1);
  m(0, 0) = e;
  f.set(I, std::move(m));
  return f;
}

MatrixForm entry_form(const MatrixForm& f, int i, int j) {
  MatrixForm r(f.deg, 1, 1);
  for (const auto& [I, m] : f.comp) {
    ExMat e(1, 1);
    e(0, 0) = m(i, j);
    r.set(I, std::move(e));
  }
  return r;
}

MatrixForm trace_form(const MatrixForm& f) {
  MatrixForm r(f.deg, 1, 1);
  for (const auto& [I, m] : f.comp) {
    ExMat e(1, 1);
    for (int i = 0; i < f.rows; ++i) e(0, 0) = e(0, 0) + m(i, i);
    r.set(I, std::move(e));
  }
  return r;
}

MatrixForm scalar_times_identity(const MatrixForm& s, int n) {
  MatrixForm r(s.deg, n, n);
  for (const auto& [I, m] : s.comp) {
    ExMat e(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = m(0, 0);
    r.set(I, e);
  }
  return r;
}

MatrixForm exterior_d(const MatrixForm& f) {
  MatrixForm r(f.deg + 1, f.rows, f.cols);
  if (f.deg >= 4) return r;
  for (const auto& [I, m] : f.comp) {
    for (uint8_t i = 0; i < 4; ++i) {
      Idx J;
      int sign = insert_index(I, i, &J);
      if (sign == 0) continue;
      ExMat dm(m.rows(), m.cols());
      bool nz = false;
      for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) {
          Expr d = m(a, b).diff(i);
          if (sign < 0) d = -d;
          if (!d.is_zero()) nz = true;
          dm(a, b) = std::move(d);
        }
      if (!nz) continue;
      auto it = r.comp.find(J);
      if (it == r.comp.end())
        r.comp[J] = std::move(dm);
      else {
        it->second = it->second + dm;
        if (mat_is_zero(it->second)) r.comp.erase(it);
      }
    }
  }
  return r;
}

MatrixForm wedge(const MatrixForm& f, const MatrixForm& g) {
  if (f.cols != g.rows) throw std::invalid_argument("wedge: matrix shape mismatch");
  MatrixForm r(f.deg + g.deg, f.rows, g.cols);
  if (r.deg > 4) return r;
  for (const auto& [I, m] : f.comp) {
    for (const auto& [J, n] : g.comp) {
      Idx K;
      int sign = merge_sign(I, J, &K);
      if (sign == 0) continue;
      ExMat p = m * n;
      if (sign < 0) p = -p;
      if (mat_is_zero(p)) continue;
      auto it = r.comp.find(K);
      if (it == r.comp.end())
        r.comp[K] = std::move(p);
      else {
        it->second = it->second + p;
        if (mat_is_zero(it->second)) r.comp.erase(it);
      }
    }
  }
  return r;
}

MatrixForm graded_commutator(const MatrixForm& f, const MatrixForm& g) {
  MatrixForm fg = wedge(f, g);
  MatrixForm gf = wedge(g, f);
  bool odd = (f.deg * g.deg) % 2 == 1;
  return odd ? fg + gf : fg - gf;
}

Metric make_metric(const ExMat& g) {
  if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("metric must be 4x4");
  Metric m;
  m.g = g;
  m.ginv = g.inverse();
  m.sqrt_det = sym::sqrt(-g.det());
  return m;
}

ExMat minkowski_eta() {
  ExMat g(4, 4);
  g(0, 0) = Expr::constant(1.0);
  for (int i = 1; i < 4; ++i) g(i, i) = Expr::constant(-1.0);
  return g;
}

Metric minkowski() { return make_metric(minkowski_eta()); }

namespace {

int perm_sign(const std::array<int, 4>& p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

const std::vector<std::array<int, 4>>& all_perms() {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> v;
    std::array<int, 4> p{0, 1, 2, 3};
    do v.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return perms;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

MatrixForm hodge(const MatrixForm& f, const Metric& met) {
  if (f.deg < 0 || f.deg > 4) throw std::invalid_argument("hodge: degree out of range");
  int p = f.deg;
  MatrixForm r(4 - p, f.rows, f.cols);
  for (const auto& [I, m] : f.comp) {
    // *(dx^I) = sqrt|g|/(4-p)! g^{I_1 s_1}...g^{I_p s_p} eps_{s} dx^{s_{p+1}..s_4}.
    // The 1/(4-p)! cancels against tail reorderings; restricting to
    // increasing tails keeps coefficients exact (no non-dyadic weights).
    for (const auto& s : all_perms()) {
      bool tail_sorted = true;
      for (int k = p; k + 1 < 4; ++k)
        if (s[k] > s[k + 1]) tail_sorted = false;
      if (!tail_sorted) continue;
      Expr coef = met.sqrt_det;
      for (int k = 0; k < p; ++k) coef = coef * met.ginv(I[k], s[k]);
      if (coef.is_zero()) continue;
      coef = coef * Expr::integer(perm_sign(s));
      Idx tail(s.begin() + p, s.end());
      ExMat sm = m * coef;
      if (mat_is_zero(sm)) continue;
      auto it = r.comp.find(tail);
      if (it == r.comp.end())
        r.comp[tail] = std::move(sm);
      else {
        it->second = it->second + sm;
        if (mat_is_zero(it->second)) r.comp.erase(it);
      }
    }
  }
  return r;
}

MatrixForm volume_form(const Metric& m) {
  return scalar_form(4, Idx{0, 1, 2, 3}, m.sqrt_det);
}

CMat evaluate(const MatrixForm& f, const std::array<cnum, 4>& x,
              const std::vector<std::array<cnum, 4>>& vectors,
              const std::map<std::string, cnum>& params) {
  if (int(vectors.size()) != f.deg)
    throw std::invalid_argument("evaluate: expected one vector per form degree");
  CMat out(f.rows, f.cols);
  for (const auto& [I, m] : f.comp) {
    // determinant of the p x p matrix of vector components along I
    int p = f.deg;
    cnum det(1.0, 0.0);
    if (p > 0) {
      CMat v(p, p);
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) v(a, b) = vectors[a][I[b]];
      det = v.det();
    }
    if (det == cnum(0.0, 0.0)) continue;
    CMat mv = eval_mat(m, x, params);
    for (int i = 0; i < f.rows; ++i)
      for (int j = 0; j < f.cols; ++j) out(i, j) += mv(i, j) * det;
  }
  return out;
}

MatrixForm freeze_form(const MatrixForm& f, const std::array<cnum, 4>& x,
                       const std::map<std::string, cnum>& params) {
  return f.map_entries(
      [&](const Expr& e) { return Expr::constant(e.evaluate(x, params)); });
}

double max_component_abs(const MatrixForm& f, const std::array<cnum, 4>& x,
                         const std::map<std::string, cnum>& params) {
  double r = 0.0;
  for (const auto& [I, m] : f.comp) r = std::max(r, max_abs(eval_mat(m, x, params)));
  return r;
}

double max_component_diff(const MatrixForm& a, const MatrixForm& b,
                          const std::array<cnum, 4>& x,
                          const std::map<std::string, cnum>& params) {
  return max_component_abs(a - b, x, params);
}

nlohmann::json MatrixForm::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [I, m] : comp) {
    nlohmann::json entry;
    entry["idx"] = I;
    nlohmann::json rows_j = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_json());
      rows_j.push_back(row);
    }
    entry["m"] = rows_j;
    comps.push_back(entry);
  }
  return nlohmann::json{
      {"deg", deg}, {"rows", rows}, {"cols", cols}, {"comp", comps}};
}

MatrixForm MatrixForm::from_json(const nlohmann::json& j) {
  MatrixForm f(j.at("deg").get<int>(), j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& entry : j.at("comp")) {
    Idx I = entry.at("idx").get<Idx>();
    const auto& rows_j = entry.at("m");
    ExMat m(f.rows, f.cols);
    for (int i = 0; i < f.rows; ++i)
      for (int jj = 0; jj < f.cols; ++jj) m(i, jj) = Expr::from_json(rows_j.at(i).at(jj));
    f.set(I, std::move(m));
  }
  return f;
}

// CMat has no direct complex det; provide it here via the generic template.
// (Declared in matrix.hpp through Mat<T>::det.)

CMat mat_exp_impl(const CMat& m) {
  int n = m.rows();
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  CMat a = m;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  if (squarings > 0) {
    double scale = std::ldexp(1.0, -squarings);
    a = m * cnum(scale, 0.0);
  }
  CMat result = CMat::identity(n);
  CMat term = CMat::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = term * a;
    term = term * cnum(1.0 / k, 0.0);
    result = result + term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace dressing::chart

namespace dressing {
CMat mat_exp(const CMat& m) { return chart::mat_exp_impl(m); }
}  // namespace dressing
