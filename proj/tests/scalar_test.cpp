#include <sstream>

#include "qg/error.hpp"
#include "qg/scalar.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::S;

TEST_CASE("scalar arithmetic is canonical") {
  const QScalar q = QScalar::q();
  CHECK((q * q - 1) / (q - 1) == q + 1);
  CHECK((q + 1) / (q * q - 1) == QScalar(1) / (q - 1));
  CHECK(q.pow(-3) * q.pow(3) == QScalar(1));
  CHECK(QScalar::q_pow(-2) == QScalar(1) / (q * q));
  CHECK((QScalar(2) * q) / (QScalar(4) * q * q) == QScalar(1) / (QScalar(2) * q));
  CHECK((-QScalar(1) / (q - 1)) == QScalar(1) / (QScalar(1) - q));
}

TEST_CASE("scalar denominators have positive leading coefficient") {
  const QScalar x = QScalar(1) / (QScalar(1) - QScalar::q());
  CHECK(x.den().lc() > 0);
  CHECK(x.num().lc() < 0);
}

TEST_CASE("scalar text round-trips") {
  for (const char* t : {"0", "1", "-7/3", "q", "q^-1", "-q^-2+1", "(1-q^2)/(1+q^2)", "q^5-3*q+2", "1/(1+q^2)",
                        "(q^3+q^-3)/(q-q^-1)", "-(q+1)^3"}) {
    CAPTURE(t);
    const QScalar x = S(t);
    CHECK(S(x.to_string()) == x);
  }
  CHECK(S("(1-q^2)/(1+q^2)").to_string() == "(1-q^2)/(1+q^2)");
  CHECK(S("1/(1+q^2)").to_string() == "1/(1+q^2)");
}

TEST_CASE("scalar evaluation is exact and reports poles") {
  CHECK(S("(1-q^2)/(1+q^2)").evaluate_at(Rational(1, 2)) == Rational(3, 5));
  CHECK(S("q^-2").evaluate_at(Rational(2, 3)) == Rational(9, 4));
  CHECK_THROWS_AS(S("1/(q-1)").evaluate_at(Rational(1)), EvaluationError);
  CHECK_THROWS_AS(S("q^-1").evaluate_at(Rational(0)), EvaluationError);
}

TEST_CASE("scalar division by zero throws") {
  CHECK_THROWS_AS(QScalar(1) / QScalar(0), DivisionByZero);
  CHECK_THROWS_AS(S("1/(q-q)"), ParseError);
}

TEST_CASE("scalar conjugation under q -> 1/q") {
  CHECK(S("q").conjugate(Involution::q_inverse) == S("q^-1"));
  CHECK(S("(1+q)/(1-q^3)").conjugate(Involution::q_inverse) == S("(1+q^-1)/(1-q^-3)"));
  CHECK(S("q").conjugate(Involution::identity) == S("q"));
}

TEST_CASE("scalar square roots") {
  auto r = S("(q^2+2*q+1)/q^4").sqrt();
  REQUIRE(r.has_value());
  CHECK(*r * *r == S("(q^2+2*q+1)/q^4"));
  CHECK_FALSE(S("q").sqrt().has_value());
}

TEST_CASE("scalar parse errors carry a column") {
  try {
    S("(1+q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 4);
  }
  CHECK_THROWS_AS(S("1+"), ParseError);
  CHECK_THROWS_AS(S("q^"), ParseError);
  CHECK_THROWS_AS(S("x"), ParseError);
}

TEST_CASE("polynomial gcd recovers a common factor") {
  // gcd(a*c, b*c) is divisible by c for coprime a, b.
  const Poly c({mpz_class(1), mpz_class(0), mpz_class(3)});
  const Poly a({mpz_class(2), mpz_class(1)});
  const Poly b({mpz_class(-1), mpz_class(0), mpz_class(0), mpz_class(1)});
  const Poly g = Poly::gcd(a * c, b * c);
  CHECK(g == c);
}
