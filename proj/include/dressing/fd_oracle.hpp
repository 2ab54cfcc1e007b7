#pragma once

// Finite-difference curvature oracle, fully independent from the symbolic
// path: metric values in, Christoffels / Ricci / Schouten and covariant
// curls out, all by Richardson-extrapolated central differences. Only the
// pointwise evaluation of the input fields is shared with the code under
// test.

#include <array>
#include <functional>

#include "dressing/forms.hpp"

namespace fdo {

using dressing::CMat;
using dressing::sym::cnum;

using Point = std::array<cnum, 4>;
using MatFn = std::function<CMat(const Point&)>;

inline Point shifted(const Point& x, int mu, double h) {
  Point y = x;
  y[mu] += h;
  return y;
}

// Richardson-extrapolated central difference of a matrix function.
inline CMat d_fd(const MatFn& f, const Point& x, int mu, double h) {
  CMat coarse = (f(shifted(x, mu, h)) - f(shifted(x, mu, -h))) * (0.5 / h);
  CMat fine = (f(shifted(x, mu, h / 2)) - f(shifted(x, mu, -h / 2))) * (1.0 / h);
  return (fine * 4.0 - coarse) * (1.0 / 3.0);
}

// Gamma^l_{mu nu} indexed as gamma[mu](l, nu).
inline std::array<CMat, 4> christoffel_fd(const MatFn& g, const Point& x,
                                          double h) {
  CMat gx = g(x);
  CMat ginv = gx.inverse();
  std::array<CMat, 4> dg;
  for (int mu = 0; mu < 4; ++mu) dg[mu] = d_fd(g, x, mu, h);
  std::array<CMat, 4> gam;
  for (int mu = 0; mu < 4; ++mu) {
    CMat m(4, 4);
    for (int l = 0; l < 4; ++l)
      for (int nu = 0; nu < 4; ++nu) {
        cnum s = 0.0;
        for (int sg = 0; sg < 4; ++sg)
          s += 0.5 * ginv(l, sg) *
               (dg[mu](sg, nu) + dg[nu](sg, mu) - dg[sg](mu, nu));
        m(l, nu) = s;
      }
    gam[mu] = m;
  }
  return gam;
}

inline CMat ricci_fd(const MatFn& g, const Point& x, double h) {
  auto gamma_at = [&](const Point& y) { return christoffel_fd(g, y, h); };
  auto gam = gamma_at(x);
  // flatten for differentiation: slot mu holds Gamma^l_{mu nu}
  std::array<std::array<CMat, 4>, 4> dgam;  // dgam[rho][mu]
  for (int rho = 0; rho < 4; ++rho) {
    for (int mu = 0; mu < 4; ++mu) {
      MatFn slice = [&, mu](const Point& y) { return christoffel_fd(g, y, h)[mu]; };
      dgam[rho][mu] = d_fd(slice, x, rho, h);
    }
  }
  CMat ric(4, 4);
  for (int nu = 0; nu < 4; ++nu)
    for (int sg = 0; sg < 4; ++sg) {
      cnum s = 0.0;
      for (int mu = 0; mu < 4; ++mu) {
        s += dgam[mu][nu](mu, sg) - dgam[nu][mu](mu, sg);
        for (int l = 0; l < 4; ++l)
          s += gam[mu](mu, l) * gam[nu](l, sg) - gam[nu](mu, l) * gam[mu](l, sg);
      }
      ric(nu, sg) = s;
    }
  return ric;
}

inline CMat schouten_fd(const MatFn& g, const Point& x, double h) {
  CMat ric = ricci_fd(g, x, h);
  CMat gx = g(x);
  CMat ginv = gx.inverse();
  cnum rs = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rs += ginv(a, b) * ric(a, b);
  return (ric - gx * (rs / 6.0)) * (-0.5);
}

// D_{mu nu sigma} = grad_mu T_{nu sigma} - grad_nu T_{mu sigma} for a
// 0-form tensor T in coordinate indices; result[mu](nu, sigma).
inline std::array<CMat, 4> cov_curl_fd(const MatFn& T, const MatFn& g,
                                       const Point& x, double h) {
  auto gam = christoffel_fd(g, x, h);
  CMat tx = T(x);
  std::array<CMat, 4> dT;
  for (int mu = 0; mu < 4; ++mu) dT[mu] = d_fd(T, x, mu, h);
  auto grad = [&](int mu, int nu, int sg) {
    cnum s = dT[mu](nu, sg);
    for (int l = 0; l < 4; ++l)
      s -= gam[mu](l, nu) * tx(l, sg) + gam[mu](l, sg) * tx(nu, l);
    return s;
  };
  std::array<CMat, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    CMat m(4, 4);
    for (int nu = 0; nu < 4; ++nu)
      for (int sg = 0; sg < 4; ++sg) m(nu, sg) = grad(mu, nu, sg) - grad(nu, mu, sg);
    out[mu] = m;
  }
  return out;
}

}  // namespace fdo
