#include "dressing/random_fields.hpp"

namespace dressing::fields {

Expr random_poly(SplitMix64& rng, int deg, bool constant_term) {
  Expr p;
  if (constant_term) p = Expr::constant(rng.dyadic());
  for (int i = 0; i < 4; ++i) p += Expr::constant(rng.dyadic()) * Expr::coordinate(i);
  if (deg >= 2) {
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        p += Expr::constant(rng.dyadic()) * Expr::coordinate(i) * Expr::coordinate(j);
  }
  if (deg >= 3) {
    for (int i = 0; i < 4; ++i)
      p += Expr::constant(rng.dyadic()) * Expr::coordinate(i).pow(3);
  }
  return p;
}

std::array<cnum, 4> random_point(SplitMix64& rng) {
  std::array<cnum, 4> x;
  for (auto& v : x) v = cnum(rng.range(-0.4, 0.4), 0.0);
  return x;
}

Expr random_complex_poly(SplitMix64& rng, int deg) {
  return random_poly(rng, deg) + Expr::i() * random_poly(rng, deg);
}

MatrixForm random_form(SplitMix64& rng, int deg, int rows, int cols, int poly_deg) {
  MatrixForm f(deg, rows, cols);
  std::vector<chart::Idx> keys;
  std::function<void(chart::Idx&, int)> gen = [&](chart::Idx& cur, int start) {
    if (int(cur.size()) == deg) {
      keys.push_back(cur);
      return;
    }
    for (int i = start; i < 4; ++i) {
      cur.push_back(uint8_t(i));
      gen(cur, i + 1);
      cur.pop_back();
    }
  };
  chart::Idx cur;
  gen(cur, 0);
  for (const auto& I : keys) {
    ExMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = random_poly(rng, poly_deg);
    f.set(I, std::move(m));
  }
  return f;
}

std::array<cnum, 4> random_vector(SplitMix64& rng) {
  std::array<cnum, 4> v;
  for (auto& c : v) c = cnum(rng.range(-1.0, 1.0), 0.0);
  return v;
}

}  // namespace dressing::fields
