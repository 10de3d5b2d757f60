#include "qg/parse.hpp"

#include <cctype>

#include "qg/error.hpp"

namespace qg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet, const StarFn& star, int line, int column)
      : s_(text), alphabet_(alphabet), star_(star), line_(line), column_(column) {}

  NCPoly run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    NCPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_ + static_cast<int>(pos_)); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  NCPoly expr() {
    NCPoly r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  NCPoly term() {
    NCPoly r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = r * unary();
      } else if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        NCPoly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division by a non-scalar");
        }
        r *= d.constant_term().inverse();
      } else if (starts_atom()) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }

  NCPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  NCPoly power() {
    NCPoly base = atom();
    while (peek('^')) {
      ++pos_;
      if (peek('*')) {
        ++pos_;
        if (!star_) fail("no *-structure available for ^*");
        base = star_(base);
        continue;
      }
      skip();
      bool negative = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        negative = s_[pos_] == '-';
        ++pos_;
      }
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (negative) e = -e;
      if (e < 0) {
        if (!base.is_constant() || base.is_zero()) fail("negative power of a non-scalar");
        base = NCPoly(base.constant_term().pow(e));
      } else if (base.is_constant()) {
        base = NCPoly(base.constant_term().pow(e));
      } else {
        NCPoly r(1);
        for (int i = 0; i < e; ++i) r = r * base;
        base = std::move(r);
      }
    }
    return base;
  }

  NCPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return NCPoly(QScalar(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "q") return NCPoly(QScalar::q());
      const int g = alphabet_.find(name);
      if (g < 0) {
        pos_ = start;
        fail("unknown symbol '" + name + "'");
      }
      return NCPoly::generator(static_cast<Letter>(g));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const Alphabet& alphabet_;
  const StarFn& star_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_poly(const std::string& text, const Alphabet& alphabet, const StarFn& star) {
  return Parser(text, alphabet, star, 1, 1).run();
}

QScalar parse_scalar_at(const std::string& text, int line, int column) {
  static const Alphabet empty;
  static const StarFn no_star;
  NCPoly p = Parser(text, empty, no_star, line, column).run();
  return p.constant_term();
}

QScalar parse_scalar(const std::string& text) { return parse_scalar_at(text, 1, 1); }

}  // namespace qg
