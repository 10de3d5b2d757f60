#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/linalg.hpp"
#include "qg/ncpoly.hpp"
#include "qg/rewrite.hpp"
#include "qg/tensor.hpp"

namespace qg {

/// Intertwiner relation E w^{⊗s} = w^{⊗t} E with E of shape N^t × N^s.
struct Relation {
  std::string name;
  int s = 0;
  int t = 0;
  Matrix E;
  bool operator==(const Relation& o) const { return name == o.name && s == o.s && t == o.t && E == o.E; }
};

/// *-structure given by w̄ = Q w Q^{-1}, where w̄_ij = (w_ij)^*.
struct StarStructure {
  Matrix Q;
  Involution involution = Involution::identity;
  bool operator==(const StarStructure& o) const { return Q == o.Q && involution == o.involution; }
};

/// Antipode matrix derived from a pair E ∈ Mor(1, w^{⊗t}), E' ∈ Mor(w^{⊗s}, 1).
struct AntipodeDerivation {
  /// N×N row-major entries of S(w) (the right inverse built from E).
  std::vector<NCPoly> matrix;
  /// The left inverse built from E', if present.
  std::vector<NCPoly> left_partner;
  bool right_inverse = false;  // w·S(w) = 1
  bool left_inverse = false;   // S(w)·w = 1
};

/// Generator tables of the structure maps. Everything else extends from these.
struct StructureMaps {
  std::vector<TensorPoly> delta;
  std::vector<QScalar> counit;
  std::vector<NCPoly> antipode;
  /// Present iff the presentation carries a *-structure.
  std::optional<std::vector<NCPoly>> star;
  Involution involution = Involution::identity;
};

/// A bialgebra/Hopf algebra generated by the entries of an N×N matrix w subject
/// to intertwiner relations. Immutable; copies share derived data and caches.
class Presentation {
 public:
  Presentation(std::string name, int N, std::vector<Relation> relations, std::optional<StarStructure> star = {},
               std::optional<Alphabet> alphabet = {}, std::optional<MonomialOrder> order = {});

  const std::string& name() const;
  int N() const;
  std::size_t generator_count() const { return static_cast<std::size_t>(N() * N()); }
  const std::vector<Relation>& relations() const;
  const std::optional<StarStructure>& star_structure() const;
  const Alphabet& alphabet() const;
  const MonomialOrder& order() const;
  const RewriteSystem& rewrite() const;
  const StructureMaps& maps() const;
  const AntipodeDerivation& antipode_derivation() const;
  /// The entrywise relations E_m w^{⊗s} - w^{⊗t} E_m, unreduced.
  const std::vector<NCPoly>& relation_polys() const;

  /// Letter of w_ij (0-based indices).
  Letter gen(int i, int j) const { return static_cast<Letter>(i * N() + j); }
  NCPoly w(int i, int j) const { return NCPoly::generator(gen(i, j)); }

  NCPoly reduce(const NCPoly& x) const { return rewrite().reduce(x); }
  std::string format(const NCPoly& x) const;
  std::string format(const TensorPoly& x) const;
  NCPoly parse(const std::string& text) const;

  /// Images of single words, memoized. Inputs need not be normal.
  const TensorPoly& delta_word(const Word& w) const;
  const NCPoly& antipode_word(const Word& w) const;
  const NCPoly& star_word(const Word& w) const;

  /// Compares the defining data (name, N, relations, star, alphabet, order).
  bool operator==(const Presentation& o) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Default weights (N-1)^2 + 1 - (i-j)^2 and precedence: diagonal from w_NN up
/// to w_11, then off-diagonal entries row by row. For N=2 this is δ<α<β<γ with
/// weights α=δ=2, β=γ=1.
MonomialOrder default_order(int N);
Alphabet default_alphabet(int N);

/// q-antisymmetrizer E_q (column, N^N rows) and E'_q (row).
std::pair<Matrix, Matrix> make_antisym_E(int N, const QScalar& q);
/// N²×N² matrix of σ(e_i⊗e_j) = q e_j⊗e_i (i<j), q e_j⊗e_i + (1-q²) e_i⊗e_j (i>j),
/// e_i⊗e_i (i=j). Columns are images of basis vectors.
Matrix make_sigma_N(int N, const QScalar& q);

Presentation slq2(const QScalar& q = QScalar::q());
Presentation sl_t1_2();
Presentation slqN(int N, const QScalar& q = QScalar::q());
Presentation suq2(const QScalar& q = QScalar::q());
Presentation suq11(const QScalar& q = QScalar::q());
/// Real form with |q| = 1; requires symbolic q or q = ±1.
Presentation slq2R(const QScalar& q = QScalar::q());
/// Lookup by name: slq2, sl_t1_2, slqN, suq2, suq11, slq2R. Throws UnsupportedRegime.
Presentation builtin(const std::string& name, const QScalar& q = QScalar::q(), int N = 3);

/// Line-oriented text format, see docs/presentation-format.md.
Presentation parse_presentation(const std::string& text);
std::string serialize(const Presentation& p);

}  // namespace qg
