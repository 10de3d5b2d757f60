#pragma once

#include <vector>

#include "qg/linalg.hpp"

namespace qg {

/// σ_k acting on the n-fold tensor power of the 2-dimensional space.
struct HeckeOp {
  int n = 0;
  int k = 0;
  Matrix matrix;
};

/// 1 + q E·E' with the SL_q(2) vectors E, E', padded to position k (1 <= k < n).
/// Throws InvariantViolation if (σ-1)(σ+q²) != 0.
HeckeOp hecke_sigma(int n, int k, const QScalar& q = QScalar::q());

/// Σ_π q^{-2ℓ(π)} σ_π over all permutations of n letters.
Matrix symmetrizer(int n, const QScalar& q = QScalar::q());

/// Basis of {x : σ_k x = x for all k} in reduced echelon form. Throws
/// InvariantViolation if the dimension is not n+1.
std::vector<Vector> sym_subspace(int n, const QScalar& q = QScalar::q());

/// Adjacent transpositions (1-based positions) of a bubble-sort reduced word for `perm`.
std::vector<int> reduced_word(std::vector<int> perm);

}  // namespace qg
