#include "qg/ncpoly.hpp"

#include <algorithm>

#include "qg/error.hpp"

namespace qg {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}

NCPoly::NCPoly(QScalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NCPoly NCPoly::monomial(Word w, QScalar c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

bool NCPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

QScalar NCPoly::constant_term() const { return coefficient(Word{}); }

QScalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

int NCPoly::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void NCPoly::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::add_scaled(const NCPoly& o, const QScalar& c) {
  if (c.is_zero()) return;
  const bool unit = c.is_one();
  for (const auto& [w, x] : o.terms_) add_term(w, unit ? x : x * c);
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  Word w;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

void check_alphabet(const NCPoly& x, std::size_t generator_count) {
  for (const auto& [w, c] : x.terms())
    for (Letter l : w)
      if (l >= generator_count)
        throw AlphabetMismatch("letter " + std::to_string(l) + " outside an alphabet of " + std::to_string(generator_count) +
                               " generators");
}

NCPoly multiply(const NCPoly& a, const NCPoly& b, std::size_t generator_count) {
  check_alphabet(a, generator_count);
  check_alphabet(b, generator_count);
  return a * b;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(std::vector<int> weights, const std::vector<Letter>& precedence)
    : weights_(std::move(weights)), rank_(weights_.size(), -1) {
  if (precedence.size() != weights_.size()) throw DimensionError("precedence must list every generator once");
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    if (precedence[i] >= weights_.size() || rank_[precedence[i]] != -1)
      throw DimensionError("precedence must list every generator once");
    rank_[precedence[i]] = static_cast<int>(i);
  }
  for (int w : weights_)
    if (w <= 0) throw DimensionError("generator weights must be positive");
}

MonomialOrder MonomialOrder::deglex(std::size_t generator_count) {
  std::vector<Letter> prec(generator_count);
  for (std::size_t i = 0; i < generator_count; ++i) prec[i] = static_cast<Letter>(i);
  return MonomialOrder(std::vector<int>(generator_count, 1), prec);
}

int MonomialOrder::weight(const Word& w) const {
  int s = 0;
  for (Letter x : w) s += weights_[x];
  return s;
}

std::vector<Letter> MonomialOrder::precedence() const {
  std::vector<Letter> p(rank_.size());
  for (std::size_t i = 0; i < rank_.size(); ++i) p[static_cast<std::size_t>(rank_[i])] = static_cast<Letter>(i);
  return p;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa < wb;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  return a.size() < b.size();
}

const Word& MonomialOrder::leading_word(const NCPoly& p) const {
  if (p.is_zero()) throw InvariantViolation("leading word of zero polynomial");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || less(*best, w)) best = &w;
  return *best;
}

std::vector<std::pair<Word, QScalar>> MonomialOrder::sorted_terms(const NCPoly& p) const {
  std::vector<std::pair<Word, QScalar>> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [this](const auto& x, const auto& y) { return less(x.first, y.first); });
  return t;
}

// ---------------------------------------------------------------- Alphabet / formatting

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

int Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += alphabet.name(w[i]);
  }
  return s;
}

std::string format(const NCPoly& p, const Alphabet& alphabet, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : order.sorted_terms(p)) {
    const bool negative = c.is_term() && sgn(c.num().lc()) < 0;
    const QScalar a = negative ? -c : c;
    std::string body;
    if (w.empty()) {
      body = a.to_string();
      if (!out.empty() && a.num().term_count() > 1) body = "(" + body + ")";
    } else if (a.is_one()) {
      body = format_word(w, alphabet);
    } else {
      std::string cs = a.to_string();
      if (a.num().term_count() > 1) cs = "(" + cs + ")";
      body = cs + "*" + format_word(w, alphabet);
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace qg
