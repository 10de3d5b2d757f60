#pragma once

#include <map>
#include <vector>

#include "qg/corep.hpp"
#include "qg/presentation.hpp"
#include "qg/report.hpp"

namespace qg {

struct PWEntry {
  int two_alpha = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  NCPoly element;
};

/// Matrix elements of v^α for 2α <= 2L, certified to form a basis of the
/// normal words of degree <= 2L, together with the Haar values on the
/// torus-invariant words.
class PWBasis {
 public:
  PWBasis(const Presentation& P, int two_L);

  int two_L() const { return two_L_; }
  const Presentation& presentation() const { return P_; }
  const std::vector<PWEntry>& entries() const { return entries_; }
  const std::vector<CorepMatrix>& coreps() const { return coreps_; }
  const CorepMatrix& corep(int two_alpha) const { return coreps_.at(static_cast<std::size_t>(two_alpha)); }
  const std::vector<Word>& words() const { return words_; }
  /// h on the normal words of weight zero.
  const std::map<Word, QScalar>& haar_table() const { return haar_table_; }

 private:
  Presentation P_;
  int two_L_;
  std::vector<CorepMatrix> coreps_;
  std::vector<PWEntry> entries_;
  std::vector<Word> words_;
  std::map<Word, QScalar> haar_table_;
};

/// Torus weights (row, column) of a word: α=(1,1), β=(1,-1), γ=(-1,1), δ=(-1,-1).
std::pair<int, int> torus_weight(const Word& w);

PWBasis build_pw_basis(const Presentation& P, int two_L);

/// h(x): the coefficient of 1 in the expansion of x in matrix elements.
/// Throws CutoffTooSmall if reduce(x) has degree above 2L.
QScalar haar(const NCPoly& x, const PWBasis& B);

struct FMatrix {
  int two_alpha = 0;
  Matrix matrix;
  bool normalized = false;
};

/// The intertwiner F with (v^α)^{cc} F = F v^α, scaled to Tr F = Tr F^{-1} and
/// positive at q = 1/2.
FMatrix f_matrix(int two_alpha, const Presentation& P);

/// A nonzero P with v P v* = P, where (v*)_ab = (v_ba)*. Equal to 1 for unitary v.
Matrix unitarizer(const CorepMatrix& v);

/// Both orthogonality relations for h(v^α_ab (v^β_cd)*) and h((v^β_cd)* v^α_ab).
Report check_pw_relations(int two_alpha, int two_beta, const PWBasis& B);

/// Algebra homomorphism with σ(w) = F w F, F = F_{1/2}.
NCPoly modular_sigma(const NCPoly& x, const Presentation& P);

/// h(ab) = h(b σ(a)) on all pairs of normal words of degree <= max_degree.
Report check_modular(const PWBasis& B, int max_degree);

/// (h⊗id)Δ(x) = (id⊗h)Δ(x) = h(x)·1 and h(S(x)) = h(x) on normal words of degree <= max_degree.
Report check_haar_invariance(const PWBasis& B, int max_degree);

/// Gram matrix h(x_i* x_j) over normal words of degree <= degree, evaluated at q0
/// and certified positive definite by exact leading principal minors. The detail
/// carries a rational lower bound on the smallest eigenvalue.
Report gram_positivity(int degree, const Rational& q0, const PWBasis& B);

}  // namespace qg
