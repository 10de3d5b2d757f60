#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qg/scalar.hpp"

namespace qg {

using Letter = std::uint8_t;
/// Product of generators, stored as letter indices. The empty word is the unit.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Finite Q(q)-linear combination of words. Terms with zero coefficient are never stored.
/// Products are formed in the free algebra; reduction is always explicit.
class NCPoly {
 public:
  /// Storage order is plain lexicographic on letter indices, not the monomial order.
  using Terms = std::map<Word, QScalar>;

  NCPoly() = default;
  NCPoly(QScalar c);  // NOLINT(google-explicit-constructor)
  NCPoly(long c) : NCPoly(QScalar(c)) {}  // NOLINT(google-explicit-constructor)
  static NCPoly monomial(Word w, QScalar c = QScalar(1));
  static NCPoly generator(Letter g) { return monomial(Word{g}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// Coefficient of the empty word.
  QScalar constant_term() const;
  QScalar coefficient(const Word& w) const;
  int degree() const;

  void add_term(const Word& w, const QScalar& c);
  void add_scaled(const NCPoly& o, const QScalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QScalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const QScalar& c) { return a *= c; }
  friend NCPoly operator*(const QScalar& c, NCPoly a) { return a *= c; }
  /// Concatenation product in the free algebra.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  /// Applies a map to every coefficient; zero results are dropped.
  template <class F>
  NCPoly map_coefficients(F&& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

 private:
  Terms terms_;
};

/// Free-algebra product; throws AlphabetMismatch if a letter is outside [0, generator_count).
NCPoly multiply(const NCPoly& a, const NCPoly& b, std::size_t generator_count);
void check_alphabet(const NCPoly& x, std::size_t generator_count);

/// Weighted-degree order refined by lexicographic comparison with a generator precedence.
///
/// Words are compared first by the sum of their letter weights, then letter by
/// letter using the precedence ranks (a proper prefix is smaller).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `precedence` lists the letters from smallest to largest.
  MonomialOrder(std::vector<int> weights, const std::vector<Letter>& precedence);
  /// All weights 1, precedence by letter index.
  static MonomialOrder deglex(std::size_t generator_count);

  std::size_t generator_count() const { return weights_.size(); }
  int weight(const Word& w) const;
  int rank(Letter x) const { return rank_[x]; }
  const std::vector<int>& weights() const { return weights_; }
  std::vector<Letter> precedence() const;
  bool less(const Word& a, const Word& b) const;
  bool operator==(const MonomialOrder& o) const { return weights_ == o.weights_ && rank_ == o.rank_; }

  /// Largest word of a nonzero polynomial.
  const Word& leading_word(const NCPoly& p) const;
  /// Terms sorted ascending in this order.
  std::vector<std::pair<Word, QScalar>> sorted_terms(const NCPoly& p) const;

 private:
  std::vector<int> weights_;
  std::vector<int> rank_;
};

/// Generator names used for text I/O.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 if unknown.
  int find(const std::string& name) const;
  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

std::string format_word(const Word& w, const Alphabet& alphabet);
/// Text form with terms ascending in `order`, e.g. "1 + q^-1*b*c".
std::string format(const NCPoly& p, const Alphabet& alphabet, const MonomialOrder& order);

}  // namespace qg
