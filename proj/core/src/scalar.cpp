#include "qg/scalar.hpp"

#include <algorithm>
#include <functional>

#include "qg/error.hpp"

namespace qg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int degree) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

std::size_t Poly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const mpz_class& c) { return c != 0; }));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return Poly(std::move(r));
}

Poly Poly::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  if (valuation() < -k) throw InvariantViolation("Poly::shifted: not divisible by q^" + std::to_string(-k));
  r.c_.assign(c_.begin() + (-k), c_.end());
  return r;
}

Poly Poly::reversed() const {
  Poly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(lc()) < 0) g = -g;
  return divexact(g);
}

Poly Poly::divexact(const mpz_class& d) const {
  if (d == 1) return *this;
  Poly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return {};
  if (d.is_constant()) return divexact(d.c_[0]);
  if (degree() < d.degree()) throw InvariantViolation("Poly::divexact: inexact division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, mpz_class(0));
  const int dd = d.degree();
  mpz_class t;
  for (int k = degree(); k >= dd; --k) {
    auto& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.lc().get_mpz_t()))
      throw InvariantViolation("Poly::divexact: inexact division");
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(k - dd);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j)
      mpz_submul(rem[shift + j].get_mpz_t(), t.get_mpz_t(), d.c_[j].get_mpz_t());
    quo[shift] = t;
  }
  for (const auto& c : rem)
    if (c != 0) throw InvariantViolation("Poly::divexact: inexact division");
  return Poly(std::move(quo));
}

Poly Poly::pseudo_remainder(const Poly& a, const Poly& b) {
  Poly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    mpz_class lr = r.lc();
    Poly t = b.scaled(lr).shifted(r.degree() - db);
    r = r.scaled(b.lc());
    r -= t;
  }
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sgn(b.lc()) < 0 ? -b : b;
  if (b.is_zero()) return sgn(a.lc()) < 0 ? -a : a;
  const int v = std::min(a.valuation(), b.valuation());
  mpz_class cont;
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_monomial() || b.is_monomial()) return Poly::monomial(cont, v);
  Poly x = a.shifted(-a.valuation()).divexact(ca);
  Poly y = b.shifted(-b.valuation()).divexact(cb);
  if (sgn(x.lc()) < 0) x = -x;
  if (sgn(y.lc()) < 0) y = -y;
  if (x == y) return x.scaled(cont).shifted(v);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part().scaled(cont).shifted(v);
}

Rational Poly::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

std::uint64_t Poly::evaluate_mod(std::uint64_t x, std::uint64_t p) const {
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = mulmod(r, x, p);
    std::uint64_t c = mpz_fdiv_ui(it->get_mpz_t(), p);
    r += c;
    if (r >= p) r -= p;
  }
  return r;
}

std::optional<Poly> Poly::sqrt() const {
  if (is_zero()) return Poly();
  if (degree() % 2 != 0 || sgn(lc()) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(lc().get_mpz_t())) return std::nullopt;
  const int m = degree() / 2;
  std::vector<mpz_class> s(static_cast<std::size_t>(m) + 1, mpz_class(0));
  mpz_sqrt(s[static_cast<std::size_t>(m)].get_mpz_t(), lc().get_mpz_t());
  const mpz_class two_top = 2 * s[static_cast<std::size_t>(m)];
  for (int k = 1; k <= m; ++k) {
    const int e = 2 * m - k;
    mpz_class acc = c_[static_cast<std::size_t>(e)];
    for (int i = m - k + 1; i <= m; ++i) {
      const int j = e - i;
      if (j <= m - k || j > m) continue;
      acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), two_top.get_mpz_t())) return std::nullopt;
    mpz_divexact(s[static_cast<std::size_t>(m - k)].get_mpz_t(), acc.get_mpz_t(), two_top.get_mpz_t());
  }
  Poly r(std::move(s));
  if (r * r != *this) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------- QScalar

QScalar::QScalar(const Rational& r) : num_(r.get_num()), den_(r.get_den()) {}

QScalar QScalar::q() { return QScalar(Poly::monomial(1, 1), Poly(1), true); }

QScalar QScalar::q_pow(int k) {
  if (k >= 0) return QScalar(Poly::monomial(1, k), Poly(1), true);
  return QScalar(Poly(1), Poly::monomial(1, -k), true);
}

QScalar QScalar::from_fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
  QScalar r(std::move(num), std::move(den), true);
  r.canonicalize();
  return r;
}

void QScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!(g.is_constant() && g.lc() == 1)) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (sgn(den_.lc()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool QScalar::is_one() const { return num_.is_constant() && !num_.is_zero() && num_.lc() == 1 && den_.is_constant() && den_.lc() == 1; }

Rational QScalar::constant_value() const {
  if (!is_constant()) throw InvariantViolation("scalar " + to_string() + " is not constant");
  if (num_.is_zero()) return 0;
  Rational r(num_.lc(), den_.lc());
  r.canonicalize();
  return r;
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_, true); }

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  Poly g = Poly::gcd(den_, o.den_);
  if (g.is_constant() && g.lc() == 1) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly b1 = den_.divexact(g);
  Poly d1 = o.den_.divexact(g);
  num_ = num_ * d1 + o.num_ * b1;
  den_ = den_ * d1;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  Poly g2 = Poly::gcd(num_, g);
  if (!(g2.is_constant() && g2.lc() == 1)) {
    num_ = num_.divexact(g2);
    den_ = den_.divexact(g2);
  }
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  num_ = num_.divexact(g1) * o.num_.divexact(g2);
  den_ = den_.divexact(g2) * o.den_.divexact(g1);
  if (sgn(den_.lc()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  QScalar r(den_, num_, true);
  if (sgn(r.den_.lc()) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QScalar QScalar::pow(int k) const {
  QScalar base = k < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  QScalar r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational QScalar::evaluate_at(const Rational& q0) const {
  Rational d = den_.evaluate(q0);
  if (d == 0) throw EvaluationError("scalar " + to_string() + " has a pole at q = " + qg::to_string(q0));
  Rational r = num_.evaluate(q0) / d;
  r.canonicalize();
  return r;
}

std::optional<std::uint64_t> QScalar::evaluate_mod(std::uint64_t q0, std::uint64_t p) const {
  std::uint64_t d = den_.evaluate_mod(q0, p);
  if (d == 0) return std::nullopt;
  return mulmod(num_.evaluate_mod(q0, p), powmod(d, p - 2, p), p);
}

QScalar QScalar::conjugate(Involution inv) const {
  if (inv == Involution::identity || is_constant()) return *this;
  // p(1/q) = rev(p) / q^deg(p)
  Poly n = num_.reversed().shifted(den_.degree());
  Poly d = den_.reversed().shifted(num_.degree());
  return from_fraction(std::move(n), std::move(d));
}

std::optional<QScalar> QScalar::sqrt() const {
  auto n = num_.sqrt();
  auto d = den_.sqrt();
  if (!n || !d) return std::nullopt;
  return QScalar(std::move(*n), std::move(*d), true);
}

std::size_t QScalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      std::size_t v = mpz_size(c.get_mpz_t()) ? mpz_getlimbn(c.get_mpz_t(), 0) : 0;
      v ^= static_cast<std::size_t>(sgn(c) + 1) << 62;
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h = h * 31 + p.coeffs().size();
  };
  mix(num_);
  mix(den_);
  return h;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

void append_term(std::string& out, const Rational& coef, int exponent) {
  const bool negative = sgn(coef) < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? '-' : '+';
  }
  Rational a = abs(coef);
  if (exponent == 0) {
    out += a.get_str();
    return;
  }
  if (a != 1) out += a.get_str() + "*";
  out += 'q';
  if (exponent != 1) out += '^' + std::to_string(exponent);
}

std::string poly_string(const Poly& p, const Rational& scale, int shift) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational coef(c[i]);
    coef /= scale;
    append_term(out, coef, static_cast<int>(i) - shift);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string QScalar::to_string() const {
  if (is_zero()) return "0";
  if (den_.is_monomial()) return poly_string(num_, Rational(den_.lc()), den_.degree());
  std::string n = poly_string(num_, 1, 0);
  std::string d = poly_string(den_, 1, 0);
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qg
