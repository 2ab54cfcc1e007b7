#pragma once

// Conformal Cartan geometry in the 1+4+1 block grading: so(2,4)-valued
// Cartan connections and their curvature blocks, the boost dressing built
// from the a-block, the residual Lorentz action and the Weyl action twisted
// through a K1-valued cocycle, tractor and twistor carriers with their
// invariant pairings, the spin (su(2,2)) side of everything, the composite
// Weyl ghost, and the normal connection of a conformally flat metric.

#include "dressing/brst.hpp"
#include "dressing/gr.hpp"

namespace dressing::conformal {

using chart::Expr;
using chart::MatrixForm;
using chart::Metric;
using groups::FieldPair;
using sym::cnum;

// so(2,4)-valued form in 1+4+1 blocks. Only the independent blocks are
// stored; assemble_blocks fills the eta-transposed copies and the repeated
// -a entry.
struct Blocks {
  MatrixForm a;      // 1x1
  MatrixForm P;      // 1x4
  MatrixForm theta;  // 4x1
  MatrixForm A;      // 4x4, so(1,3)-valued
};

Blocks zero_blocks(int deg);
MatrixForm assemble_blocks(const Blocks& b);
Blocks split_blocks(const MatrixForm& w);

// Curvature d w + w ^ w of the assembled connection, split back into
// blocks: a-slot f = da + P^theta, P-slot C = dP + a^P + P^A, theta-slot
// Th = d theta + A^theta + theta^a, A-slot W = dA + A^A + theta^P +
// P^t ^ theta^t.
Blocks curvature_blocks(const Blocks& conn);

// First dressing: u1 = K1(q) with the row q = a . e^{-1}, the unique K1
// choice that erases the a-block.
struct BoostDressing {
  ExMat q;      // 1x4 row of 0-form entries
  FieldPair u;  // K1(q) with inverse K1(-q)
};
BoostDressing boost_dressing(const Blocks& conn, const FieldPair& e);
Blocks dress_boost(const Blocks& conn, const BoostDressing& u1);

// Tractors: 6x1 carriers paired through Sigma = [[0,0,-1],[0,eta,0],
// [-1,0,0]].
Expr tractor_pairing(const ExMat& x, const ExMat& y);
MatrixForm pairing_form(const MatrixForm& x, const MatrixForm& y);
MatrixForm covariant_d(const MatrixForm& conn_form, const MatrixForm& phi);
MatrixForm covariant_d(const Blocks& conn, const MatrixForm& phi);

// Residual Lorentz action: S embedded as diag(1, S, 1), acting as an
// ordinary gauge transformation of the dressed data.
FieldPair embed_lorentz(const FieldPair& S);
Blocks residual_lorentz_blocks(const Blocks& w1, const FieldPair& S);

// Residual Weyl action, twisted through C(z) = K1(Upsilon) Z with
// z = exp(w), Upsilon the frame row of dw and Z = diag(z, 1, 1/z).
struct WeylMap {
  Expr w;
  Expr z;         // exp(w)
  ExMat upsilon;  // 1x4 row of 0-form entries
  FieldPair Z;
  FieldPair C;
};
WeylMap weyl_map(const Expr& w, const FieldPair& e);
gauge::Cocycle weyl_cocycle(const FieldPair& e);
gauge::Cocycle weyl_spin_cocycle(const FieldPair& e);

Blocks residual_weyl_blocks(const Blocks& w1, const WeylMap& zm);
MatrixForm residual_weyl_tractor(const MatrixForm& phi1, const WeylMap& zm);

// Spin side: su(2,2)-valued forms through the blockwise algebra
// isomorphism, twistors paired through Sigma-bar, the spin boost dressing
// and the spin Weyl map Cbar(z) = [[z^{1/2} 1, -i z^{-1/2} Upsilon-bar],
// [0, z^{-1/2} 1]].
MatrixForm spin_form(const MatrixForm& w);
FieldPair spin_boost_dressing(const ExMat& q);
FieldPair embed_lorentz_spin(const FieldPair& Sbar);
FieldPair weyl_spin_map(const WeylMap& zm);
MatrixForm residual_weyl_twistor(const MatrixForm& psi1, const WeylMap& zm);
Expr twistor_helicity(const MatrixForm& psi);

// Frame row of the differential of a scalar field: r_b = (d f)_mu
// (e^{-1})^mu_b.
ExMat frame_row(const Expr& f, const FieldPair& e);

// Composite Weyl ghost c(eps) = [[eps, d eps, 0], [0, 0, d eps^t],
// [0, 0, -eps]] with the differential taken in frame components.
ExMat conformal_ghost(const Expr& eps, const FieldPair& e);

// Ghost blocks of the parabolic gradings: Weyl eps at grade 0, Lorentz s
// at grade 0, conformal boosts iota at grade 1.
ExMat weyl_ghost(const Expr& eps);
ExMat lorentz_ghost(const ExMat& s);
ExMat boost_ghost(const ExMat& iota);

// Normal connection of g = exp(2p) eta: theta = exp(p) dx, A the
// Levi-Civita frame connection, P the Schouten row, a = 0. The coordinate
// Schouten tensor -1/2 (Ric - Rs/6 g) is kept alongside.
struct NormalGeometry {
  Blocks conn;
  FieldPair e;
  Metric m;
  MatrixForm schouten;  // 0-form 4x4, coordinate indices
};
NormalGeometry normal_conformally_flat(const Expr& p);

// Row block T_mu . e^{-1} of a 0-form tensor in coordinate indices.
MatrixForm row_block_of_tensor(const MatrixForm& T, const FieldPair& e);

// Random so(2,4)-valued 1-form with polynomial entries, and random
// tractor/twistor 0-forms.
Blocks random_blocks(SplitMix64& rng, int poly_deg = 1);
MatrixForm random_tractor(SplitMix64& rng);
MatrixForm random_twistor(SplitMix64& rng);

// Fixture payload for the CLI: frame (with its inverse), Weyl exponent,
// tractor and twistor fields.
struct Fixture {
  FieldPair e;
  Expr w;
  MatrixForm tractor;  // 6x1 0-form
  MatrixForm twistor;  // 4x1 0-form
};
nlohmann::json fixture_to_json(const Fixture& f);
Fixture fixture_from_json(const nlohmann::json& j);

}  // namespace dressing::conformal
