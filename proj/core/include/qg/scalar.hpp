#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qg {

using Rational = mpq_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficient i belongs to q^i; the vector never has trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(long c);
  explicit Poly(const mpz_class& c);
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Exactly one nonzero term.
  bool is_monomial() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const mpz_class& lc() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  std::size_t term_count() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpz_class& s) const;
  /// Multiplies by q^k. A negative k divides and requires divisibility.
  Poly shifted(int k) const;
  /// q^deg * p(1/q).
  Poly reversed() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  mpz_class content() const;
  Poly primitive_part() const;
  Poly divexact(const Poly& d) const;
  /// Exact division by an integer.
  Poly divexact(const mpz_class& d) const;
  static Poly pseudo_remainder(const Poly& a, const Poly& b);
  /// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational evaluate(const Rational& x) const;
  std::uint64_t evaluate_mod(std::uint64_t x, std::uint64_t p) const;
  /// Square root in Z[q] if p is a perfect square.
  std::optional<Poly> sqrt() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// The action of complex conjugation on q.
enum class Involution { identity, q_inverse };

/// Element of Q(q) in lowest terms: gcd(num, den) = 1 in Z[q] and lc(den) > 0.
class QScalar {
 public:
  QScalar() : num_(), den_(1) {}
  QScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QScalar(const mpz_class& c) : num_(c), den_(1) {}
  explicit QScalar(const Rational& r);

  /// The deformation parameter q.
  static QScalar q();
  /// q^k for any integer k.
  static QScalar q_pow(int k);
  /// Reduces num/den to canonical form. Throws DivisionByZero if den is zero.
  static QScalar from_fraction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The rational value of a constant scalar.
  Rational constant_value() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  QScalar inverse() const;
  QScalar pow(int k) const;

  bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  /// Exact substitution q = q0. Throws EvaluationError at a pole.
  Rational evaluate_at(const Rational& q0) const;
  /// Substitution modulo a prime; nullopt if the denominator vanishes there.
  std::optional<std::uint64_t> evaluate_mod(std::uint64_t q0, std::uint64_t p) const;
  QScalar conjugate(Involution inv) const;
  /// Square root in Q(q) if one exists with integer-polynomial numerator and denominator.
  std::optional<QScalar> sqrt() const;

  /// Numerator and denominator are single terms, e.g. -3*q^-2.
  bool is_term() const { return num_.is_monomial() && den_.is_monomial(); }
  bool is_negative_term() const { return is_term() && sgn(num_.lc()) < 0; }
  std::string to_string() const;
  std::size_t hash() const;

 private:
  QScalar(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  Poly num_;
  Poly den_;
};

std::string to_string(const Rational& r);

/// Parses scalar text such as "(1-q^2)/(1+q^2)". Throws ParseError.
QScalar parse_scalar(const std::string& text);

}  // namespace qg
