#include "qg/error.hpp"
#include "qg/hopf.hpp"
#include "qg/rewrite.hpp"
#include "qg/sphere.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::S;

namespace {

NCPoly sphere(const SpherePresentation& B, const std::string& t) { return B.reduce(B.parse(t)); }

}  // namespace

TEST_CASE("sphere parameters") {
  const QScalar q = QScalar::q();
  const SphereParameter c2 = SphereParameter::c_of(2, q);
  CHECK(c2.value == S("-q^4/(1+q^4)^2"));
  CHECK(SphereParameter::parse("c(2)", q).value == c2.value);
  CHECK(SphereParameter::parse("inf", q).kind == SphereParameter::Kind::infinite);
  CHECK(SphereParameter::parse("c", q).kind == SphereParameter::Kind::symbolic);
  CHECK(SphereParameter::parse("3/7", q).value == S("3/7"));
  CHECK_THROWS_AS(SphereParameter::parse("c(x)", q), ParseError);
  CHECK_THROWS_AS(SphereParameter::c_of(0, q), UnsupportedRegime);
}

TEST_CASE("lambda and rho") {
  const SpherePresentation B(QScalar::q(), SphereParameter::finite(S("2")));
  CHECK(B.lambda() == S("1-q^2"));
  CHECK(B.rho() == S("(1+q^2)^2*q^-2*2+1"));
  const SpherePresentation I(QScalar::q(), SphereParameter::infinite());
  CHECK(I.lambda() == S("0"));
  CHECK(I.rho() == S("(1+q^2)^2*q^-2"));
  CHECK_THROWS_AS(SpherePresentation(QScalar::q(), SphereParameter::symbolic()), UnsupportedRegime);
}

TEST_CASE("sphere rewrite rules") {
  const SpherePresentation B(QScalar::q(), SphereParameter::finite(S("3/7")));
  CHECK(sphere(B, "e0*em1") == sphere(B, "q^2*em1*e0 + (1-q^2)*em1"));
  CHECK(sphere(B, "e1*e0") == sphere(B, "q^2*e0*e1 + (1-q^2)*e1"));
  CHECK(is_locally_confluent(B.rewrite()));
  for (const auto& cp : critical_pairs(B.rewrite())) CHECK(cp.difference.is_zero());
  const SpherePresentation I(QScalar::q(), SphereParameter::infinite());
  CHECK(sphere(I, "e0*em1") == sphere(I, "q^2*em1*e0"));
  // Normal words are em1^a e0^b e1^c with b <= 1.
  for (const auto& w : basis_words(B.rewrite(), 3)) {
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1] <= w[i]);
    CHECK(std::count(w.begin(), w.end(), Letter{1}) <= 1);
  }
}

TEST_CASE("sphere star is compatible with reduction") {
  const SpherePresentation B(QScalar::q(), SphereParameter::finite(S("1")));
  CHECK(B.star(B.parse("em1")) == B.parse("e1"));
  for (const auto& w : basis_words(RewriteSystem(3, MonomialOrder::deglex(3), {}), 3)) {
    const NCPoly x = NCPoly::monomial(w);
    CHECK(B.reduce(B.star(B.reduce(x))) == B.star(x));
  }
}

TEST_CASE("coaction values") {
  const SpherePresentation B(QScalar::q(), SphereParameter::finite(S("1/2")));
  const Presentation& A = B.group();
  const auto u = sphere_u1(A);
  CHECK(coaction(NCPoly(1), B) == TensorPoly::unit(2));
  TensorPoly want(2);
  for (Letter j = 0; j < 3; ++j) want += TensorPoly::product_of({NCPoly::generator(j), u[j * 3 + 1]});
  CHECK(coaction(B.parse("e0"), B) == want);
  // Γ(e_1*) = (*⊗*)Γ(e_1).
  TensorPoly starred(2);
  const TensorPoly g = coaction(B.parse("e1"), B);
  for (const auto& [key, c] : g.terms())
    starred.add_scaled(TensorPoly::product_of({B.star(NCPoly::monomial(key[0])), star(NCPoly::monomial(key[1]), A)}),
                       c);
  CHECK(coaction(B.star(B.parse("e1")), B) == starred);
}

TEST_CASE("u1 is a corepresentation equivalent to spin 1") {
  const Report r = check_u1(suq2());
  CAPTURE(r.to_text());
  CHECK(r.passed());
  CHECK(check_u1(slq2()).passed());
}

TEST_CASE("coaction checks") {
  const QScalar q = QScalar::q();
  for (const SphereParameter& c :
       {SphereParameter::finite(S("0")), SphereParameter::infinite(), SphereParameter::c_of(2, q)}) {
    const Report r = check_sphere(q, c);
    CAPTURE(r.to_text());
    CHECK(r.passed());
  }
  const Report bad = check_coaction(SpherePresentation(q, SphereParameter::finite(S("1"))), S("1"));
  CHECK_FALSE(bad.passed());
  CHECK_FALSE(bad.find("Γ preserves the relations")->passed);
  CHECK_FALSE(bad.find("Γ preserves the relations")->witness.empty());
}

TEST_CASE("classical sphere") {
  const Report r = check_sphere(S("1"), SphereParameter::finite(S("2")));
  CHECK(r.passed());
  const SpherePresentation B(S("1"), SphereParameter::finite(S("2")));
  CHECK(B.lambda().is_zero());
  // At q = 1 the generators commute.
  CHECK(sphere(B, "e1*em1") == sphere(B, "em1*e1"));
  CHECK(sphere(B, "e0*em1") == sphere(B, "em1*e0"));
}
