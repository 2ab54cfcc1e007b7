#include "dressing/gr.hpp"

#include <numbers>

#include "dressing/random_fields.hpp"

namespace dressing::gr {

using chart::entry_form;
using chart::exterior_d;
using chart::form0;
using chart::hodge;
using chart::minkowski_eta;
using chart::scalar_form;
using chart::trace_form;
using chart::wedge;

namespace {

Expr c(double v) { return Expr::constant(v); }

MatrixForm curvature_of(const MatrixForm& conn) {
  return exterior_d(conn) + wedge(conn, conn);
}

}  // namespace

MatrixForm coframe_of(const ExMat& e) {
  MatrixForm theta(1, 4, 1);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat col(4, 1);
    for (int i = 0; i < 4; ++i) col(i, 0) = e(i, mu);
    theta.set({mu}, col);
  }
  return theta;
}

Metric induced_metric(const FieldPair& e) {
  ExMat eta = minkowski_eta();
  Metric m;
  m.g = e.value.transpose() * eta * e.value;
  m.ginv = e.inverse * eta * e.inverse.transpose();
  m.sqrt_det = e.value.det();
  return m;
}

MatrixForm assemble_cartan(const Geometry& geo) {
  MatrixForm w(1, 5, 5);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(5, 5);
    m.set_block(0, 0, geo.A.component({mu}));
    m.set_block(0, 4, geo.theta.component({mu}));
    w.set({mu}, m);
  }
  return w;
}

Geometry split_cartan(const MatrixForm& w) {
  Geometry geo;
  geo.A = MatrixForm(w.deg, 4, 4);
  geo.theta = MatrixForm(w.deg, 4, 1);
  for (const auto& [I, m] : w.comp) {
    geo.A.set(I, m.block(0, 0, 4, 4));
    geo.theta.set(I, m.block(0, 4, 4, 1));
  }
  return geo;
}

Dressed dress_gr(const Geometry& geo, const FieldPair& e) {
  Dressed d;
  MatrixForm ev = form0(e.value), ei = form0(e.inverse);
  d.gamma = wedge(ei, wedge(geo.A, ev)) + wedge(ei, exterior_d(ev));
  d.coframe = wedge(ei, geo.theta);
  d.g = form0(e.value.transpose() * minkowski_eta() * e.value);
  return d;
}

MatrixForm vec_transpose(const MatrixForm& x, const MatrixForm& m) {
  return wedge(x.transpose(), m);
}

MatrixForm metricity_residual(const Dressed& d) {
  return exterior_d(d.g) - wedge(d.gamma.transpose(), d.g) - wedge(d.g, d.gamma);
}

MatrixForm palatini_lagrangian(const Geometry& geo, const Metric& m, double newton) {
  MatrixForm R = curvature_of(geo.A);
  MatrixForm tt = wedge(geo.theta, vec_transpose(geo.theta, form0(minkowski_eta())));
  return trace_form(wedge(R, hodge(tt, m))) *
         c(-1.0 / (32.0 * std::numbers::pi * newton));
}

MatrixForm palatini_lagrangian_dressed(const Dressed& d, const Metric& m,
                                       double newton) {
  MatrixForm sR = curvature_of(d.gamma);
  MatrixForm tt = wedge(d.coframe, vec_transpose(d.coframe, d.g));
  return trace_form(wedge(sR, hodge(tt, m))) *
         c(-1.0 / (32.0 * std::numbers::pi * newton));
}

MatrixForm ricci_tensor(const MatrixForm& curv) {
  ExMat ric(4, 4);
  for (int nu = 0; nu < 4; ++nu)
    for (int sigma = 0; sigma < 4; ++sigma) {
      Expr s;
      for (int mu = 0; mu < 4; ++mu) {
        if (mu < sigma)
          s = s + curv.component({uint8_t(mu), uint8_t(sigma)})(mu, nu);
        else if (mu > sigma)
          s = s - curv.component({uint8_t(sigma), uint8_t(mu)})(mu, nu);
      }
      ric(nu, sigma) = s;
    }
  return form0(ric);
}

MatrixForm einstein_hilbert_lagrangian(const Dressed& d, const Metric& m,
                                       double newton) {
  ExMat ric = ricci_tensor(curvature_of(d.gamma)).component({});
  Expr rs;
  for (int nu = 0; nu < 4; ++nu)
    for (int sigma = 0; sigma < 4; ++sigma) rs = rs + m.ginv(nu, sigma) * ric(nu, sigma);
  return scalar_form(4, {0, 1, 2, 3},
                     rs * m.sqrt_det * c(1.0 / (32.0 * std::numbers::pi * newton)));
}

Dressed coordinate_change(const Dressed& d, const FieldPair& G) {
  Dressed out;
  MatrixForm gv = form0(G.value), gi = form0(G.inverse);
  out.gamma = wedge(gi, wedge(d.gamma, gv)) + wedge(gi, exterior_d(gv));
  out.coframe = wedge(gi, d.coframe);
  out.g = wedge(form0(G.value.transpose()), wedge(d.g, gv));
  return out;
}

Geometry lorentz_transform(const Geometry& geo, const FieldPair& S) {
  Geometry out;
  MatrixForm sv = form0(S.value), si = form0(S.inverse);
  out.A = wedge(si, wedge(geo.A, sv)) + wedge(si, exterior_d(sv));
  out.theta = wedge(si, geo.theta);
  return out;
}

FieldPair lorentz_transform_frame(const FieldPair& e, const FieldPair& S) {
  return FieldPair{S.inverse * e.value, e.inverse * S.value};
}

ExMat lorentz_generator(int a, int b) {
  ExMat eta = minkowski_eta();
  ExMat J(4, 4);
  J(a, b) = eta(b, b);
  J(b, a) = -eta(a, a);
  return J;
}

MatrixForm random_lorentz_one_form(SplitMix64& rng, int poly_deg) {
  MatrixForm A(1, 4, 4);
  for (uint8_t mu = 0; mu < 4; ++mu) {
    ExMat m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        m = m + lorentz_generator(a, b) * fields::random_poly(rng, poly_deg);
    A.set({mu}, m);
  }
  return A;
}

FieldPair random_frame(SplitMix64& rng, int shears) {
  ExMat dv(4, 4), dvi(4, 4);
  for (int i = 0; i < 4; ++i) {
    Expr p = fields::random_poly(rng, 1);
    dv(i, i) = sym::exp(p);
    dvi(i, i) = sym::exp(-p);
  }
  FieldPair f{dv, dvi};
  for (int s = 0; s < shears; ++s) {
    int i = rng.uniform_int(0, 3), j = rng.uniform_int(0, 3);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    Expr q = fields::random_poly(rng, 1);
    ExMat sv = ExMat::identity(4), si = ExMat::identity(4);
    sv(i, j) = q;
    si(i, j) = -q;
    f = groups::mul(f, FieldPair{sv, si});
  }
  return f;
}

FieldPair random_jacobian(SplitMix64& rng) {
  // polynomial entries only: exp factors would never merge under
  // composition and the conjugation products blow up
  ExMat dv(4, 4), dvi(4, 4);
  for (int i = 0; i < 4; ++i) {
    double s = 0.5 + rng.dyadic(4) + 0.75;  // away from zero
    dv(i, i) = c(s);
    dvi(i, i) = c(1.0 / s);
  }
  FieldPair f{dv, dvi};
  for (int s = 0; s < 2; ++s) {
    int i = rng.uniform_int(0, 3), j = rng.uniform_int(0, 3);
    if (i == j) continue;
    Expr q = fields::random_poly(rng, 1);
    ExMat sv = ExMat::identity(4), si = ExMat::identity(4);
    sv(i, j) = q;
    si(i, j) = -q;
    f = groups::mul(f, FieldPair{sv, si});
  }
  return f;
}

}  // namespace dressing::gr
