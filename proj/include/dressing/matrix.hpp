#pragma once

// Dense matrices over either symbolic expressions or complex numbers. Sizes
// here are tiny (at most 6x6), so everything is direct: cofactor
// determinants, adjugate inverses, no pivoting. The same template serves the
// symbolic path (T = sym::Expr) and the numeric oracles (T = sym::cnum).

#include <stdexcept>
#include <vector>

#include "dressing/expr.hpp"

namespace dressing {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<sym::Expr> {
  static sym::Expr zero() { return sym::Expr(); }
  static sym::Expr one() { return sym::Expr::constant(1.0); }
  static sym::Expr from_double(double v) { return sym::Expr::constant(v); }
  static bool is_zero(const sym::Expr& v) { return v.is_zero(); }
  static sym::Expr inverse(const sym::Expr& v) { return v.pow(-1); }
  static sym::Expr conj(const sym::Expr& v) { return v.conj(); }
};

template <>
struct ScalarOps<sym::cnum> {
  static sym::cnum zero() { return {0.0, 0.0}; }
  static sym::cnum one() { return {1.0, 0.0}; }
  static sym::cnum from_double(double v) { return {v, 0.0}; }
  static bool is_zero(const sym::cnum& v) { return v == sym::cnum(0.0, 0.0); }
  static sym::cnum inverse(const sym::cnum& v) { return 1.0 / v; }
  static sym::cnum conj(const sym::cnum& v) { return std::conj(v); }
};

template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(size_t(r) * c, ScalarOps<T>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
  }
  Mat operator-() const {
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < o.c_; ++j) {
        T s = ScalarOps<T>::zero();
        for (int k = 0; k < c_; ++k) s = s + (*this)(i, k) * o(k, j);
        m(i, j) = s;
      }
    return m;
  }
  Mat operator*(const T& s) const {
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  Mat conj() const {
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = ScalarOps<T>::conj(a_[k]);
    return m;
  }
  Mat conj_transpose() const { return conj().transpose(); }

  T trace() const {
    T s = ScalarOps<T>::zero();
    for (int i = 0; i < r_ && i < c_; ++i) s = s + (*this)(i, i);
    return s;
  }

  bool is_diagonal() const {
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (i != j && !ScalarOps<T>::is_zero((*this)(i, j))) return false;
    return true;
  }

  T det() const {
    if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
    if (r_ == 0) return ScalarOps<T>::one();
    if (r_ == 1) return a_[0];
    T s = ScalarOps<T>::zero();
    for (int j = 0; j < c_; ++j) {
      T cof = minor_at(0, j).det();
      T term = (*this)(0, j) * cof;
      s = (j % 2 == 0) ? s + term : s - term;
    }
    return s;
  }

  // Adjugate-based inverse with a diagonal fast path; exact when entries
  // admit exact inverses (diagonal exponentials in particular).
  Mat inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    if (is_diagonal()) {
      Mat m(r_, c_);
      for (int i = 0; i < r_; ++i) m(i, i) = ScalarOps<T>::inverse((*this)(i, i));
      return m;
    }
    T d = det();
    T dinv = ScalarOps<T>::inverse(d);
    Mat m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) {
        T cof = minor_at(j, i).det();
        T v = cof * dinv;
        m(i, j) = ((i + j) % 2 == 0) ? v : -v;
      }
    return m;
  }

  Mat block(int i0, int j0, int rn, int cn) const {
    Mat m(rn, cn);
    for (int i = 0; i < rn; ++i)
      for (int j = 0; j < cn; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }
  void set_block(int i0, int j0, const Mat& b) {
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

 private:
  Mat minor_at(int di, int dj) const {
    Mat m(r_ - 1, c_ - 1);
    for (int i = 0, mi = 0; i < r_; ++i) {
      if (i == di) continue;
      for (int j = 0, mj = 0; j < c_; ++j) {
        if (j == dj) continue;
        m(mi, mj) = (*this)(i, j);
        ++mj;
      }
      ++mi;
    }
    return m;
  }
  void check_same(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }

  int r_, c_;
  std::vector<T> a_;
};

using ExMat = Mat<sym::Expr>;
using CMat = Mat<sym::cnum>;

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& m) {
  return m * s;
}

inline CMat eval_mat(const ExMat& m, const std::array<sym::cnum, 4>& x,
                     const std::map<std::string, sym::cnum>& params = {}) {
  CMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(x, params);
  return r;
}

inline double max_abs(const CMat& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

inline double max_abs_diff(const CMat& a, const CMat& b) {
  double r = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

// Numeric matrix exponential (scaling and squaring with a Taylor core);
// used only for sampling and membership oracles.
CMat mat_exp(const CMat& m);

}  // namespace dressing
