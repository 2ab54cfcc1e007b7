#pragma once

// Small symbolic engine for chart calculus.
//
// Expressions live in a canonical normal form: a sum of terms, each term a
// complex coefficient times a product of atomic bases raised to integer
// powers. Bases are chart coordinates x0..x3, named parameters, elementary
// functions (exp, log, sin, cos, sqrt) of a canonical argument, or an
// atomized multi-term polynomial (needed for negative powers). The normal
// form keeps exp factors merged (exp(u)*exp(v) -> exp(u+v)) and folds
// sqrt(u)^2 -> u, which is what makes the structural-zero identities in the
// test-suite exact rather than approximate.
//
// Values are immutable; all operations return fresh expressions. Comparison
// of expressions for testing purposes is done by evaluation at sample
// points, never by tree equality.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace dressing::sym {

using cnum = std::complex<double>;

class Expr;

enum class Fn : uint8_t { Exp, Log, Sin, Cos, Sqrt };

struct Atom;
using AtomPtr = std::shared_ptr<const Atom>;

struct Factor {
  AtomPtr base;
  int exp;
};

struct Term {
  cnum c;
  std::vector<Factor> mono;  // sorted by atom order, no zero exponents
};

struct ExprData {
  std::vector<Term> terms;  // sorted by monomial order, coefficients nonzero
};

class Expr {
 public:
  Expr() = default;  // zero

  static Expr constant(cnum v);
  static Expr constant(double v) { return constant(cnum(v, 0.0)); }
  static Expr integer(long long v) { return constant(cnum(double(v), 0.0)); }
  static Expr rational(long long num, long long den);
  static Expr i();  // imaginary unit
  static Expr coordinate(int idx);  // 0..3
  static Expr parameter(const std::string& name);

  bool is_zero() const { return !d_ || d_->terms.empty(); }
  // True iff the expression is a plain constant; stores it in *v if so.
  bool as_constant(cnum* v) const;

  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator*(const Expr& o) const;
  Expr operator-() const;
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

  // Integer power; negative powers of multi-term sums atomize the sum.
  Expr pow(int n) const;

  Expr diff(int coord) const;
  Expr diff_param(const std::string& name) const;
  Expr conj() const;

  // Substitute a value (or a whole expression) for a named parameter.
  Expr subs_param(const std::string& name, cnum value) const;
  Expr subs_param(const std::string& name, const Expr& value) const;

  cnum evaluate(const std::array<cnum, 4>& x,
                const std::map<std::string, cnum>& params = {}) const;

  std::string str() const;

  nlohmann::json to_json() const;
  static Expr from_json(const nlohmann::json& j);

  const std::vector<Term>& terms() const {
    static const std::vector<Term> empty;
    return d_ ? d_->terms : empty;
  }

  // Total order on canonical forms; used internally for atom ordering and
  // for deterministic serialization. Not a semantic equality test.
  static int cmp(const Expr& a, const Expr& b);

  static Expr from_terms(std::vector<Term> ts);  // normalizes

 private:
  std::shared_ptr<const ExprData> d_;
};

struct Atom {
  enum class Kind : uint8_t { Coord, Param, Func, Poly } kind;
  int idx = 0;        // Coord
  std::string name;   // Param
  Fn fn = Fn::Exp;    // Func
  Expr arg;           // Func argument or Poly body
};

int atom_cmp(const Atom& a, const Atom& b);

Expr exp(const Expr& e);
Expr log(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr sqrt(const Expr& e);

inline Expr operator*(double s, const Expr& e) { return Expr::constant(s) * e; }
inline Expr operator*(cnum s, const Expr& e) { return Expr::constant(s) * e; }
inline Expr operator+(double s, const Expr& e) { return Expr::constant(s) + e; }
inline Expr operator-(double s, const Expr& e) { return Expr::constant(s) - e; }

}  // namespace dressing::sym
