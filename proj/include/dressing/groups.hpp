#pragma once

// Matrix group machinery: structure matrices, eta-transposition, the
// conformal parabolic K0 K1 factorization, the vector/covector bar maps into
// 2x2 matrices, the so(2,4) -> su(2,2) isomorphism and the SL(2,C) ->
// SO(1,3) covering. Symbolic group-valued fields use closed-form
// exponentials (Euler-Rodrigues for SU(2), elementary rotations and boosts
// for SO(1,3), nilpotent series for K1); the numeric matrix exponential is
// only an oracle for tests.
//
// Conventions pinned here and relied on throughout:
//   eta = diag(1,-1,-1,-1)
//   column x: x^t = x^T eta (a row);  row r: r^t = eta^{-1} r^T (a column)
//   bar(x) = x^a sigma_a for vectors, bar_cov(r) = (1/2) r_a sigma_a for
//   covectors (the 1/2 is forced by bracket preservation of the iso)

#include "dressing/forms.hpp"
#include "dressing/rng.hpp"

namespace dressing::groups {

using chart::Expr;
using chart::MatrixForm;
using sym::cnum;

enum class GroupKind { U1, SU2, SO13, SL2C, SO24, SU22, ConformalH, K1, Weyl, GL };

struct GroupSpec {
  GroupKind kind;
  int n;  // matrix size, -1 for any
};

GroupSpec spec_for(GroupKind k);
const char* group_name(GroupKind k);

// Frobenius residual of the defining group relation at a numeric sample.
double group_membership_residual(GroupKind k, const CMat& M);
// Residual of the defining algebra relation.
double algebra_membership_residual(GroupKind k, const CMat& X);

CMat cpauli(int a);   // sigma_0 = 1, sigma_1..3 Pauli
ExMat epauli(int a);
CMat sigma6_numeric();
ExMat sigma6();       // [[0,0,-1],[0,eta,0],[-1,0,0]] in 1+4+1 blocks
CMat sigma_bar4_numeric();
ExMat sigma_bar4();   // antidiag(1_2, 1_2)

// eta-transposition between rows and columns.
ExMat eta_transpose_col(const ExMat& col);  // 4x1 -> 1x4
ExMat eta_transpose_row(const ExMat& row);  // 1x4 -> 4x1
MatrixForm eta_transpose_col(const MatrixForm& col);
MatrixForm eta_transpose_row(const MatrixForm& row);

// Conformal parabolic subgroup H = K0 K1 in SO(2,4), 1+4+1 blocks.
// K1(r) = [[1, r, r r^t / 2], [0, 1, r^t], [0, 0, 1]] with r^t = eta^{-1} r^T.
template <class T>
Mat<T> k1_matrix(const Mat<T>& r) {
  Mat<T> eta(4, 4);
  eta(0, 0) = ScalarOps<T>::one();
  for (int i = 1; i < 4; ++i) eta(i, i) = -ScalarOps<T>::one();
  Mat<T> rt = eta * r.transpose();  // eta^{-1} = eta
  Mat<T> m = Mat<T>::identity(6);
  m.set_block(0, 1, r);
  m.set_block(1, 5, rt);
  m(0, 5) = (r * rt)(0, 0) * ScalarOps<T>::from_double(0.5);
  return m;
}
ExMat k0_matrix(const Expr& z, const ExMat& S);
ExMat conformal_H_compose(const Expr& z, const ExMat& S, const ExMat& r);

struct ConformalHParts {
  Expr z;
  ExMat S;  // 4x4
  ExMat r;  // 1x4
};
ConformalHParts decompose_conformal_H(const ExMat& M);

struct ConformalHPartsNumeric {
  cnum z;
  CMat S;
  CMat r;
  double residual;  // reconstruction residual
};
ConformalHPartsNumeric decompose_conformal_H(const CMat& M);

// Vector and covector bar maps.
ExMat bar_map(const ExMat& x);   // 4x1 -> 2x2, x^a sigma_a
ExMat bar_cov(const ExMat& r);   // 1x4 -> 2x2, (1/2) r_a sigma_a
CMat bar_map(const CMat& x);
CMat bar_cov(const CMat& r);

// so(1,3) -> sl(2,C): boosts K_k -> sigma_k/2, rotations J_k -> i sigma_k/2.
ExMat sl2_of_so13(const ExMat& s);
CMat sl2_of_so13(const CMat& s);

// SL(2,C) -> SO(1,3) covering: S^b_a = (1/2) tr(sigma_b Sb sigma_a Sb^dag).
CMat spin_cover(const CMat& sbar);

// so(2,4) block data (epsilon, s, tau, iota).
struct SO24Blocks {
  Expr eps;
  ExMat s;     // 4x4, so(1,3)
  ExMat tau;   // 4x1
  ExMat iota;  // 1x4
};
ExMat so24_assemble(const SO24Blocks& b);
SO24Blocks so24_extract(const ExMat& X);

// The isomorphism so(2,4) -> su(2,2), applied blockwise.
ExMat so24_to_su22(const ExMat& X);
CMat so24_to_su22(const CMat& X);

// Symbolic group-valued fields with exact inverses carried along.
struct FieldPair {
  ExMat value;
  ExMat inverse;
};

Expr u1_field(const Expr& theta);                   // cos + i sin
FieldPair su2_field(const Expr& c1, const Expr& c2, const Expr& c3);
FieldPair so13_rotation(int axis, const Expr& angle);
FieldPair so13_boost(int axis, const Expr& rapidity);
FieldPair sl2_rotation(int axis, const Expr& angle);     // exp(i angle sigma/2)
FieldPair sl2_boost(int axis, const Expr& rapidity);     // exp(rapidity sigma/2)
FieldPair mul(const FieldPair& a, const FieldPair& b);
FieldPair identity_field(int n);

// Random symbolic gauge parameters: products of elementary rotations and
// boosts with low-degree polynomial angles, mirrored on the spin side.
struct LorentzPair {
  FieldPair vector;  // SO(1,3)-valued
  FieldPair spin;    // SL(2,C)-valued, covering the vector part
};
LorentzPair random_lorentz_field(SplitMix64& rng, int factors = 2);

FieldPair k1_field(const ExMat& q);        // 6x6, q a 1x4 row of Exprs
FieldPair k1_spin_field(const ExMat& q);   // 4x4 upper unipotent

// Numeric samplers for membership and bracket oracles.
CMat random_so13_algebra(SplitMix64& rng);
CMat random_so24_algebra(SplitMix64& rng);
SO24Blocks random_so24_blocks(SplitMix64& rng);

}  // namespace dressing::groups
