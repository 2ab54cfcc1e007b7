#include "dressing/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dressing::sym {

namespace {

int cnum_cmp(const cnum& a, const cnum& b) {
  if (a.real() < b.real()) return -1;
  if (a.real() > b.real()) return 1;
  if (a.imag() < b.imag()) return -1;
  if (a.imag() > b.imag()) return 1;
  return 0;
}

int kind_rank(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Coord: return 0;
    case Atom::Kind::Param: return 1;
    case Atom::Kind::Func: return 2;
    case Atom::Kind::Poly: return 3;
  }
  return 4;
}

cnum ipow(cnum v, int n) {
  if (n < 0) return 1.0 / ipow(v, -n);
  cnum r{1.0, 0.0};
  while (n-- > 0) r *= v;
  return r;
}

}  // namespace

int atom_cmp(const Atom& a, const Atom& b) {
  int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind) {
    case Atom::Kind::Coord:
      return a.idx == b.idx ? 0 : (a.idx < b.idx ? -1 : 1);
    case Atom::Kind::Param:
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
    case Atom::Kind::Func: {
      if (a.fn != b.fn) return int(a.fn) < int(b.fn) ? -1 : 1;
      return Expr::cmp(a.arg, b.arg);
    }
    case Atom::Kind::Poly:
      return Expr::cmp(a.arg, b.arg);
  }
  return 0;
}

static int mono_cmp(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = atom_cmp(*a[i].base, *b[i].base);
    if (c != 0) return c;
    if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int Expr::cmp(const Expr& a, const Expr& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = mono_cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    c = cnum_cmp(ta[i].c, tb[i].c);
    if (c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

namespace {

AtomPtr make_atom(Atom a) { return std::make_shared<const Atom>(std::move(a)); }

bool is_const_expr(const Expr& e, cnum* v) { return e.as_constant(v); }

// One normalization pass over a term's factor list. Returns terms to emit
// (a term can fan out when folds produce polynomial multipliers).
void normalize_term_into(cnum coef, std::vector<Factor> fs, std::vector<Term>& out);

void emit_product(cnum coef, const std::vector<Factor>& fs,
                  const std::vector<Expr>& pending, std::vector<Term>& out) {
  Expr acc = Expr::from_terms({Term{coef, fs}});
  for (const auto& p : pending) acc = acc * p;
  for (const auto& t : acc.terms()) out.push_back(t);
}

void normalize_term_into(cnum coef, std::vector<Factor> fs, std::vector<Term>& out) {
  if (coef == cnum(0, 0)) return;
  std::vector<Expr> pending;

  for (int pass = 0; pass < 16; ++pass) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
      return atom_cmp(*a.base, *b.base) < 0;
    });
    std::vector<Factor> merged;
    for (auto& f : fs) {
      if (!merged.empty() && atom_cmp(*merged.back().base, *f.base) == 0)
        merged.back().exp += f.exp;
      else
        merged.push_back(f);
    }
    fs.clear();
    for (auto& f : merged)
      if (f.exp != 0) fs.push_back(f);

    bool changed = false;

    // Merge all exp factors into a single exponential with combined argument.
    {
      int count = 0;
      bool nontrivial = false;
      Expr combined;
      for (const auto& f : fs) {
        if (f.base->kind == Atom::Kind::Func && f.base->fn == Fn::Exp) {
          ++count;
          if (f.exp != 1) nontrivial = true;
          combined += (f.exp == 1) ? f.base->arg : Expr::integer(f.exp) * f.base->arg;
        }
      }
      if (count > 0) {
        cnum whole;
        bool is_const = combined.as_constant(&whole);
        bool rebuild = count > 1 || nontrivial || is_const;
        if (rebuild) {
          fs.erase(std::remove_if(fs.begin(), fs.end(),
                                  [](const Factor& f) {
                                    return f.base->kind == Atom::Kind::Func &&
                                           f.base->fn == Fn::Exp;
                                  }),
                   fs.end());
          if (is_const) {
            if (whole != cnum(0, 0)) coef *= std::exp(whole);
          } else {
            fs.push_back(
                Factor{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Exp, combined}), 1});
          }
          changed = true;
        }
      }
    }

    for (auto it = fs.begin(); it != fs.end() && !changed;) {
      const Atom& a = *it->base;
      int n = it->exp;
      cnum cv;
      if (a.kind == Atom::Kind::Func && is_const_expr(a.arg, &cv)) {
        cnum v;
        switch (a.fn) {
          case Fn::Exp: v = std::exp(cv); break;
          case Fn::Log: v = std::log(cv); break;
          case Fn::Sin: v = std::sin(cv); break;
          case Fn::Cos: v = std::cos(cv); break;
          case Fn::Sqrt: v = std::sqrt(cv); break;
        }
        coef *= ipow(v, n);
        it = fs.erase(it);
        changed = true;
        break;
      }
      if (a.kind == Atom::Kind::Func && a.fn == Fn::Sqrt && (n < 0 || n > 1)) {
        int r = ((n % 2) + 2) % 2;
        int q = (n - r) / 2;
        pending.push_back(a.arg.pow(q));
        it->exp = r;
        changed = true;
        break;
      }
      if (a.kind == Atom::Kind::Func && a.fn == Fn::Sqrt) {
        // sqrt(exp(u)) -> exp(u/2)
        const auto& ts = a.arg.terms();
        if (ts.size() == 1 && ts[0].mono.size() == 1 && ts[0].c == cnum(1, 0) &&
            ts[0].mono[0].base->kind == Atom::Kind::Func &&
            ts[0].mono[0].base->fn == Fn::Exp && ts[0].mono[0].exp == 1) {
          Expr half = Expr::rational(1, 2) * ts[0].mono[0].base->arg;
          Factor nf{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Exp, half}), n};
          *it = nf;
          changed = true;
          break;
        }
      }
      if (a.kind == Atom::Kind::Func && a.fn == Fn::Log) {
        // log(exp(u)) -> u
        const auto& ts = a.arg.terms();
        if (ts.size() == 1 && ts[0].mono.size() == 1 && ts[0].c == cnum(1, 0) &&
            ts[0].mono[0].base->kind == Atom::Kind::Func &&
            ts[0].mono[0].base->fn == Fn::Exp && ts[0].mono[0].exp == 1) {
          pending.push_back(ts[0].mono[0].base->arg.pow(n));
          it = fs.erase(it);
          changed = true;
          break;
        }
      }
      if (a.kind == Atom::Kind::Poly) {
        cnum pv;
        if (is_const_expr(a.arg, &pv)) {
          coef *= ipow(pv, n);
          it = fs.erase(it);
          changed = true;
          break;
        }
        if (n > 0) {
          pending.push_back(a.arg.pow(n));
          it = fs.erase(it);
          changed = true;
          break;
        }
        if (a.arg.terms().size() == 1) {
          pending.push_back(a.arg.pow(n));
          it = fs.erase(it);
          changed = true;
          break;
        }
      }
      ++it;
    }

    if (!changed) break;
  }

  if (pending.empty()) {
    out.push_back(Term{coef, std::move(fs)});
  } else {
    emit_product(coef, fs, pending, out);
  }
}

}  // namespace

Expr Expr::from_terms(std::vector<Term> ts) {
  std::vector<Term> flat;
  for (auto& t : ts) normalize_term_into(t.c, std::move(t.mono), flat);
  std::sort(flat.begin(), flat.end(),
            [](const Term& a, const Term& b) { return mono_cmp(a.mono, b.mono) < 0; });
  std::vector<Term> merged;
  for (auto& t : flat) {
    if (!merged.empty() && mono_cmp(merged.back().mono, t.mono) == 0)
      merged.back().c += t.c;
    else
      merged.push_back(std::move(t));
  }
  std::vector<Term> result;
  for (auto& t : merged)
    if (t.c != cnum(0, 0)) result.push_back(std::move(t));
  Expr e;
  if (!result.empty()) {
    auto d = std::make_shared<ExprData>();
    d->terms = std::move(result);
    e.d_ = std::move(d);
  }
  return e;
}

Expr Expr::constant(cnum v) {
  if (v == cnum(0, 0)) return Expr();
  return from_terms({Term{v, {}}});
}

Expr Expr::rational(long long num, long long den) {
  return constant(cnum(double(num) / double(den), 0.0));
}

Expr Expr::i() { return constant(cnum(0, 1)); }

Expr Expr::coordinate(int idx) {
  if (idx < 0 || idx > 3) throw std::out_of_range("coordinate index must be 0..3");
  return from_terms({Term{cnum(1, 0), {Factor{make_atom(Atom{Atom::Kind::Coord, idx}), 1}}}});
}

Expr Expr::parameter(const std::string& name) {
  return from_terms(
      {Term{cnum(1, 0), {Factor{make_atom(Atom{Atom::Kind::Param, 0, name}), 1}}}});
}

bool Expr::as_constant(cnum* v) const {
  if (is_zero()) {
    *v = cnum(0, 0);
    return true;
  }
  const auto& ts = terms();
  if (ts.size() == 1 && ts[0].mono.empty()) {
    *v = ts[0].c;
    return true;
  }
  return false;
}

Expr Expr::operator+(const Expr& o) const {
  // Both operands canonical: merge their sorted term lists directly.
  const auto& ta = terms();
  const auto& tb = o.terms();
  std::vector<Term> merged;
  merged.reserve(ta.size() + tb.size());
  size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    int c = mono_cmp(ta[i].mono, tb[j].mono);
    if (c < 0)
      merged.push_back(ta[i++]);
    else if (c > 0)
      merged.push_back(tb[j++]);
    else {
      Term t = ta[i++];
      t.c += tb[j++].c;
      if (t.c != cnum(0, 0)) merged.push_back(std::move(t));
    }
  }
  while (i < ta.size()) merged.push_back(ta[i++]);
  while (j < tb.size()) merged.push_back(tb[j++]);
  Expr e;
  if (!merged.empty()) {
    auto d = std::make_shared<ExprData>();
    d->terms = std::move(merged);
    e.d_ = std::move(d);
  }
  return e;
}

Expr Expr::operator-() const {
  std::vector<Term> ts = terms();
  for (auto& t : ts) t.c = -t.c;
  Expr e;
  if (!ts.empty()) {
    auto d = std::make_shared<ExprData>();
    d->terms = std::move(ts);
    e.d_ = std::move(d);
  }
  return e;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
  if (is_zero() || o.is_zero()) return Expr();
  std::vector<Term> prod;
  for (const auto& ta : terms()) {
    for (const auto& tb : o.terms()) {
      std::vector<Factor> fs = ta.mono;
      fs.insert(fs.end(), tb.mono.begin(), tb.mono.end());
      prod.push_back(Term{ta.c * tb.c, std::move(fs)});
    }
  }
  return from_terms(std::move(prod));
}

Expr Expr::pow(int n) const {
  if (n == 0) return constant(1.0);
  if (n == 1) return *this;
  if (is_zero()) {
    if (n > 0) return Expr();
    throw std::domain_error("inverse of zero expression");
  }
  const auto& ts = terms();
  if (ts.size() == 1) {
    Term t = ts[0];
    t.c = ipow(t.c, n);
    for (auto& f : t.mono) f.exp *= n;
    return from_terms({std::move(t)});
  }
  if (n >= 2) {
    Expr r = *this;
    for (int k = 1; k < n; ++k) r = r * *this;
    return r;
  }
  // Negative power of a multi-term sum: atomize.
  Expr inner = *this;
  return from_terms(
      {Term{cnum(1, 0),
            {Factor{make_atom(Atom{Atom::Kind::Poly, 0, "", Fn::Exp, inner}), n}}}});
}

namespace {

Expr factor_to_expr(const Factor& f) {
  return Expr::from_terms({Term{cnum(1, 0), {f}}});
}

Expr term_rest(const Term& t, size_t skip) {
  std::vector<Factor> fs;
  for (size_t k = 0; k < t.mono.size(); ++k)
    if (k != skip) fs.push_back(t.mono[k]);
  return Expr::from_terms({Term{t.c, std::move(fs)}});
}

}  // namespace

Expr Expr::diff(int coord) const {
  Expr result;
  for (const auto& t : terms()) {
    for (size_t k = 0; k < t.mono.size(); ++k) {
      const Factor& f = t.mono[k];
      const Atom& a = *f.base;
      Expr piece;
      switch (a.kind) {
        case Atom::Kind::Coord: {
          if (a.idx != coord) continue;
          Factor nf = f;
          nf.exp -= 1;
          Expr base = nf.exp == 0 ? constant(1.0) : factor_to_expr(nf);
          piece = Expr::integer(f.exp) * base;
          break;
        }
        case Atom::Kind::Param:
          continue;
        case Atom::Kind::Func: {
          Expr da = a.arg.diff(coord);
          if (da.is_zero()) continue;
          Factor down = f;
          down.exp -= 1;
          Expr outer = down.exp == 0 ? constant(1.0) : factor_to_expr(down);
          Expr dfn;
          switch (a.fn) {
            case Fn::Exp: dfn = factor_to_expr(f); outer = constant(1.0); break;
            case Fn::Log: dfn = a.arg.pow(-1); break;
            case Fn::Sin:
              dfn = factor_to_expr(
                  Factor{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Cos, a.arg}), 1});
              break;
            case Fn::Cos:
              dfn = -factor_to_expr(
                  Factor{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Sin, a.arg}), 1});
              break;
            case Fn::Sqrt: {
              Factor inv = f;
              inv.exp -= 2;  // A^{n-1} * A^{-1}
              outer = inv.exp == 0 ? constant(1.0) : factor_to_expr(inv);
              dfn = Expr::rational(1, 2);
              break;
            }
          }
          piece = Expr::integer(f.exp) * outer * dfn * da;
          break;
        }
        case Atom::Kind::Poly: {
          Expr da = a.arg.diff(coord);
          if (da.is_zero()) continue;
          Factor down = f;
          down.exp -= 1;
          Expr outer = down.exp == 0 ? constant(1.0) : factor_to_expr(down);
          piece = Expr::integer(f.exp) * outer * da;
          break;
        }
      }
      result += term_rest(t, k) * piece;
    }
  }
  return result;
}

Expr Expr::diff_param(const std::string& name) const {
  Expr result;
  for (const auto& t : terms()) {
    for (size_t k = 0; k < t.mono.size(); ++k) {
      const Factor& f = t.mono[k];
      const Atom& a = *f.base;
      Expr piece;
      switch (a.kind) {
        case Atom::Kind::Coord:
          continue;
        case Atom::Kind::Param: {
          if (a.name != name) continue;
          Factor nf = f;
          nf.exp -= 1;
          Expr base = nf.exp == 0 ? constant(1.0) : factor_to_expr(nf);
          piece = Expr::integer(f.exp) * base;
          break;
        }
        case Atom::Kind::Func: {
          Expr da = a.arg.diff_param(name);
          if (da.is_zero()) continue;
          Factor down = f;
          down.exp -= 1;
          Expr outer = down.exp == 0 ? constant(1.0) : factor_to_expr(down);
          Expr dfn;
          switch (a.fn) {
            case Fn::Exp: dfn = factor_to_expr(f); outer = constant(1.0); break;
            case Fn::Log: dfn = a.arg.pow(-1); break;
            case Fn::Sin:
              dfn = factor_to_expr(
                  Factor{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Cos, a.arg}), 1});
              break;
            case Fn::Cos:
              dfn = -factor_to_expr(
                  Factor{make_atom(Atom{Atom::Kind::Func, 0, "", Fn::Sin, a.arg}), 1});
              break;
            case Fn::Sqrt: {
              Factor inv = f;
              inv.exp -= 2;
              outer = inv.exp == 0 ? constant(1.0) : factor_to_expr(inv);
              dfn = Expr::rational(1, 2);
              break;
            }
          }
          piece = Expr::integer(f.exp) * outer * dfn * da;
          break;
        }
        case Atom::Kind::Poly: {
          Expr da = a.arg.diff_param(name);
          if (da.is_zero()) continue;
          Factor down = f;
          down.exp -= 1;
          Expr outer = down.exp == 0 ? constant(1.0) : factor_to_expr(down);
          piece = Expr::integer(f.exp) * outer * da;
          break;
        }
      }
      result += term_rest(t, k) * piece;
    }
  }
  return result;
}

Expr Expr::conj() const {
  std::vector<Term> out;
  for (const auto& t : terms()) {
    Term nt;
    nt.c = std::conj(t.c);
    for (const auto& f : t.mono) {
      const Atom& a = *f.base;
      switch (a.kind) {
        case Atom::Kind::Coord:
        case Atom::Kind::Param:
          nt.mono.push_back(f);
          break;
        case Atom::Kind::Func:
          nt.mono.push_back(
              Factor{make_atom(Atom{Atom::Kind::Func, 0, "", a.fn, a.arg.conj()}), f.exp});
          break;
        case Atom::Kind::Poly:
          nt.mono.push_back(
              Factor{make_atom(Atom{Atom::Kind::Poly, 0, "", Fn::Exp, a.arg.conj()}), f.exp});
          break;
      }
    }
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

Expr Expr::subs_param(const std::string& name, const Expr& value) const {
  Expr result;
  for (const auto& t : terms()) {
    Expr acc = constant(t.c);
    for (const auto& f : t.mono) {
      const Atom& a = *f.base;
      Expr base;
      switch (a.kind) {
        case Atom::Kind::Coord: base = coordinate(a.idx); break;
        case Atom::Kind::Param:
          base = (a.name == name) ? value : parameter(a.name);
          break;
        case Atom::Kind::Func: {
          Expr sa = a.arg.subs_param(name, value);
          switch (a.fn) {
            case Fn::Exp: base = sym::exp(sa); break;
            case Fn::Log: base = sym::log(sa); break;
            case Fn::Sin: base = sym::sin(sa); break;
            case Fn::Cos: base = sym::cos(sa); break;
            case Fn::Sqrt: base = sym::sqrt(sa); break;
          }
          break;
        }
        case Atom::Kind::Poly:
          base = a.arg.subs_param(name, value);
          break;
      }
      acc = acc * base.pow(f.exp);
    }
    result += acc;
  }
  return result;
}

Expr Expr::subs_param(const std::string& name, cnum value) const {
  return subs_param(name, constant(value));
}

cnum Expr::evaluate(const std::array<cnum, 4>& x,
                    const std::map<std::string, cnum>& params) const {
  cnum sum(0, 0);
  for (const auto& t : terms()) {
    cnum v = t.c;
    for (const auto& f : t.mono) {
      const Atom& a = *f.base;
      cnum b;
      switch (a.kind) {
        case Atom::Kind::Coord: b = x[a.idx]; break;
        case Atom::Kind::Param: {
          auto it = params.find(a.name);
          if (it == params.end())
            throw std::runtime_error("unbound parameter: " + a.name);
          b = it->second;
          break;
        }
        case Atom::Kind::Func: {
          cnum arg = a.arg.evaluate(x, params);
          switch (a.fn) {
            case Fn::Exp: b = std::exp(arg); break;
            case Fn::Log: b = std::log(arg); break;
            case Fn::Sin: b = std::sin(arg); break;
            case Fn::Cos: b = std::cos(arg); break;
            case Fn::Sqrt: b = std::sqrt(arg); break;
          }
          break;
        }
        case Atom::Kind::Poly: b = a.arg.evaluate(x, params); break;
      }
      v *= ipow(b, f.exp);
    }
    sum += v;
  }
  return sum;
}

Expr exp(const Expr& e) {
  cnum v;
  if (e.as_constant(&v)) return Expr::constant(std::exp(v));
  return Expr::from_terms(
      {Term{cnum(1, 0),
            {Factor{std::make_shared<const Atom>(Atom{Atom::Kind::Func, 0, "", Fn::Exp, e}), 1}}}});
}

Expr log(const Expr& e) {
  cnum v;
  if (e.as_constant(&v)) return Expr::constant(std::log(v));
  return Expr::from_terms(
      {Term{cnum(1, 0),
            {Factor{std::make_shared<const Atom>(Atom{Atom::Kind::Func, 0, "", Fn::Log, e}), 1}}}});
}

Expr sin(const Expr& e) {
  cnum v;
  if (e.as_constant(&v)) return Expr::constant(std::sin(v));
  return Expr::from_terms(
      {Term{cnum(1, 0),
            {Factor{std::make_shared<const Atom>(Atom{Atom::Kind::Func, 0, "", Fn::Sin, e}), 1}}}});
}

Expr cos(const Expr& e) {
  cnum v;
  if (e.as_constant(&v)) return Expr::constant(std::cos(v));
  return Expr::from_terms(
      {Term{cnum(1, 0),
            {Factor{std::make_shared<const Atom>(Atom{Atom::Kind::Func, 0, "", Fn::Cos, e}), 1}}}});
}

Expr sqrt(const Expr& e) {
  cnum v;
  if (e.as_constant(&v)) return Expr::constant(std::sqrt(v));
  return Expr::from_terms(
      {Term{cnum(1, 0),
            {Factor{std::make_shared<const Atom>(Atom{Atom::Kind::Func, 0, "", Fn::Sqrt, e}), 1}}}});
}

namespace {

std::string cnum_str(const cnum& c) {
  std::ostringstream os;
  os.precision(17);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
  }
  return os.str();
}

const char* fn_name(Fn f) {
  switch (f) {
    case Fn::Exp: return "exp";
    case Fn::Log: return "log";
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Sqrt: return "sqrt";
  }
  return "?";
}

std::string atom_str(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Coord: return "x" + std::to_string(a.idx);
    case Atom::Kind::Param: return a.name;
    case Atom::Kind::Func: return std::string(fn_name(a.fn)) + "(" + a.arg.str() + ")";
    case Atom::Kind::Poly: return "(" + a.arg.str() + ")";
  }
  return "?";
}

}  // namespace

std::string Expr::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms()) {
    if (!first) s += " + ";
    first = false;
    s += cnum_str(t.c);
    for (const auto& f : t.mono) {
      s += "*" + atom_str(*f.base);
      if (f.exp != 1) s += "^" + std::to_string(f.exp);
    }
  }
  return s;
}

namespace {

nlohmann::json atom_json(const Atom& a) {
  nlohmann::json j;
  switch (a.kind) {
    case Atom::Kind::Coord:
      j["k"] = "x";
      j["i"] = a.idx;
      break;
    case Atom::Kind::Param:
      j["k"] = "p";
      j["n"] = a.name;
      break;
    case Atom::Kind::Func:
      j["k"] = "f";
      j["fn"] = fn_name(a.fn);
      j["a"] = a.arg.to_json();
      break;
    case Atom::Kind::Poly:
      j["k"] = "s";
      j["a"] = a.arg.to_json();
      break;
  }
  return j;
}

Atom atom_from_json(const nlohmann::json& j) {
  std::string k = j.at("k").get<std::string>();
  if (k == "x") return Atom{Atom::Kind::Coord, j.at("i").get<int>()};
  if (k == "p") return Atom{Atom::Kind::Param, 0, j.at("n").get<std::string>()};
  if (k == "f") {
    std::string fn = j.at("fn").get<std::string>();
    Fn f = Fn::Exp;
    if (fn == "exp") f = Fn::Exp;
    else if (fn == "log") f = Fn::Log;
    else if (fn == "sin") f = Fn::Sin;
    else if (fn == "cos") f = Fn::Cos;
    else if (fn == "sqrt") f = Fn::Sqrt;
    else throw std::runtime_error("unknown function tag: " + fn);
    return Atom{Atom::Kind::Func, 0, "", f, Expr::from_json(j.at("a"))};
  }
  if (k == "s") return Atom{Atom::Kind::Poly, 0, "", Fn::Exp, Expr::from_json(j.at("a"))};
  throw std::runtime_error("unknown atom tag: " + k);
}

}  // namespace

nlohmann::json Expr::to_json() const {
  nlohmann::json terms_j = nlohmann::json::array();
  for (const auto& t : terms()) {
    nlohmann::json tj;
    tj["c"] = {t.c.real(), t.c.imag()};
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& f : t.mono) mono.push_back({atom_json(*f.base), f.exp});
    tj["m"] = mono;
    terms_j.push_back(tj);
  }
  return nlohmann::json{{"t", terms_j}};
}

Expr Expr::from_json(const nlohmann::json& j) {
  std::vector<Term> ts;
  for (const auto& tj : j.at("t")) {
    Term t;
    auto c = tj.at("c");
    t.c = cnum(c.at(0).get<double>(), c.at(1).get<double>());
    for (const auto& fj : tj.at("m")) {
      t.mono.push_back(Factor{std::make_shared<const Atom>(atom_from_json(fj.at(0))),
                              fj.at(1).get<int>()});
    }
    ts.push_back(std::move(t));
  }
  return from_terms(std::move(ts));
}

}  // namespace dressing::sym
