#pragma once

#include <vector>

#include "qg/presentation.hpp"
#include "qg/report.hpp"

namespace qg {

/// Algebra-homomorphism extension of Δw_ij = Σ_k w_ik⊗w_kj; both legs reduced.
TensorPoly delta(const NCPoly& x, const Presentation& P);
/// Unital homomorphism extension of ε(w_ij) = δ_ij.
QScalar counit(const NCPoly& x, const Presentation& P);
/// S(w) as an N×N row-major matrix. Throws UnsupportedRegime without an E/E' pair.
std::vector<NCPoly> derive_antipode(const Presentation& P);
/// Antihomomorphism extension of the antipode table, reduced.
NCPoly antipode(const NCPoly& x, const Presentation& P);
/// Antilinear antihomomorphism extension of w*_ij = (QwQ^{-1})_ij, reduced.
NCPoly star(const NCPoly& x, const Presentation& P);

/// Multiplication A⊗A → A followed by reduction.
NCPoly multiply_legs(const TensorPoly& x, const Presentation& P);
/// (*⊗...⊗*) applied legwise, conjugating coefficients.
TensorPoly star_legs(const TensorPoly& x, const Presentation& P);

/// Verifies well-definedness of the structure maps on the relations, then
/// coassociativity, counit and antipode laws (and the *-axioms when present)
/// on all normal words of degree <= max_degree.
Report check_hopf_axioms(const Presentation& P, int max_degree);

/// w*Bw = B and wBw* = B with (w*)_ij = (w_ji)*, after reduction. B = 1 checks
/// unitarity of w. Throws UnsupportedRegime without a *-structure.
Report check_b_matrix(const Presentation& P, const Matrix& B);

/// The character w ↦ diag(a, a^{-1}) of an N=2 presentation.
class Character {
 public:
  /// Throws UnsupportedRegime if N != 2 and InvariantViolation if a relation is not annihilated.
  Character(QScalar a, const Presentation& P);
  QScalar operator()(const NCPoly& x) const;
  const QScalar& a() const { return a_; }

 private:
  QScalar a_;
  QScalar a_inv_;
};

Character character(const QScalar& a, const Presentation& P);

}  // namespace qg
