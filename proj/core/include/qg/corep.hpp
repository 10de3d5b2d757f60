#pragma once

#include <map>
#include <string>
#include <vector>

#include "qg/presentation.hpp"
#include "qg/report.hpp"

namespace qg {

/// Square matrix v over a presented algebra with Δv_ab = Σ_c v_ac⊗v_cb and ε(v_ab) = δ_ab.
class CorepMatrix {
 public:
  /// Reduces the entries and checks both corepresentation conditions.
  /// Throws InvariantViolation naming the first failing entry.
  CorepMatrix(const Presentation& P, std::size_t dim, std::vector<NCPoly> entries);

  std::size_t dim() const { return dim_; }
  const NCPoly& operator()(std::size_t a, std::size_t b) const { return entries_[a * dim_ + b]; }
  const std::vector<NCPoly>& entries() const { return entries_; }
  const Presentation& presentation() const { return P_; }

  /// Nested arrays of quoted entries, one row per line.
  std::string to_string() const;

 private:
  Presentation P_;
  std::size_t dim_;
  std::vector<NCPoly> entries_;
};

/// Both conditions of a corepresentation, as a report (nothing is thrown).
Report check_corep(const Presentation& P, std::size_t dim, const std::vector<NCPoly>& entries);

CorepMatrix fundamental(const Presentation& P);
CorepMatrix trivial(const Presentation& P);
/// Throws AlphabetMismatch if v and w live over different presentations.
CorepMatrix direct_sum(const CorepMatrix& v, const CorepMatrix& w);
/// (v⊗w)_{ij,kl} = v_ik w_jl.
CorepMatrix tensor_prod(const CorepMatrix& v, const CorepMatrix& w);
/// v^c_ij = S(v_ji).
CorepMatrix contragredient(const CorepMatrix& v);

/// Basis of {A : A v = w A}, each A of shape dim(w)×dim(v).
std::vector<Matrix> mor_space(const CorepMatrix& v, const CorepMatrix& w);

/// The corepresentation v with w A = A v for A of full column rank whose columns
/// span a w-invariant subspace. Throws InvariantViolation if the span is not invariant.
CorepMatrix subcorep(const CorepMatrix& w, const Matrix& A);

/// v^l for a 2×2 presentation, from the q-symmetric subspace of w^{⊗2l}.
CorepMatrix spin_corep(int two_l, const Presentation& P);
/// Matrix whose columns span K^{n/2}, as used by spin_corep.
Matrix spin_basis(int n, const QScalar& q);

struct CGTable {
  int two_a = 0;
  int two_b = 0;
  /// 2c ↦ dim Mor(v^c, v^a⊗v^b) for 0 <= c <= a+b.
  std::map<int, std::size_t> multiplicity;
  Report report;
};

/// Multiplicities of v^c in v^a⊗v^b compared against |a-b| <= c <= a+b in integer steps.
CGTable clebsch_gordan_check(int two_a, int two_b, const Presentation& P);

/// Conditions (iii)-(vi) for a twisting matrix X of w⊗w̄ versus w̄⊗w, where w̄ is
/// formed with P's *-structure and conjugation uses `inv`.
Report check_lorentz_X(const Matrix& X, const Presentation& P, Involution inv);

/// Half-integer text for 2l, e.g. "3/2" or "1".
std::string spin_label(int two_l);

}  // namespace qg
