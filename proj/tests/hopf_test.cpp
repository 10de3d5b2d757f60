#include "qg/error.hpp"
#include "qg/hopf.hpp"
#include "qg/rewrite.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::E;
using qg::test::S;

namespace {

TensorPoly tensor(const Presentation& P, const std::string& left, const std::string& right) {
  return TensorPoly::product_of({E(P, left), E(P, right)});
}

// Apply the antipode table twice to a generator.
NCPoly S2(const Presentation& P, const std::string& x) { return antipode(antipode(P.parse(x), P), P); }

}  // namespace

TEST_CASE("comultiplication on generators and products") {
  const Presentation P = slq2();
  CHECK(delta(P.parse("a"), P) == tensor(P, "a", "a") + tensor(P, "b", "c"));
  CHECK(delta(P.parse("b"), P) == tensor(P, "a", "b") + tensor(P, "b", "d"));
  CHECK(delta(NCPoly(1), P) == TensorPoly::unit(2));
  // Multiplicativity against an unreduced product reduced afterwards.
  const TensorPoly raw = delta(P.parse("a"), P) * delta(P.parse("b"), P);
  CHECK(raw.size() == 4);
  CHECK(delta(P.parse("a*b"), P) == tensor_reduce(raw, P.rewrite(), P.rewrite()));
  CHECK(delta(P.parse("b*a"), P) == tensor_reduce(delta(P.parse("b"), P) * delta(P.parse("a"), P), P.rewrite(),
                                                  P.rewrite()));
}

TEST_CASE("counit") {
  const Presentation P = slq2();
  CHECK(counit(P.parse("a"), P) == S("1"));
  CHECK(counit(P.parse("b"), P) == S("0"));
  CHECK(counit(NCPoly(1), P) == S("1"));
  CHECK(counit(P.parse("a*d - q*b*c"), P) == S("1"));
  CHECK(counit(P.parse("2*a*a*d + q*d - 3"), P) == S("q-1"));
}

TEST_CASE("derived antipode of SL_q(2)") {
  const Presentation P = slq2();
  const auto Sw = derive_antipode(P);
  REQUIRE(Sw.size() == 4);
  CHECK(Sw[0] == E(P, "d"));
  CHECK(Sw[1] == E(P, "-q^-1*b"));
  CHECK(Sw[2] == E(P, "-q*c"));
  CHECK(Sw[3] == E(P, "a"));
  CHECK(P.antipode_derivation().right_inverse);
  CHECK(P.antipode_derivation().left_inverse);
}

TEST_CASE("antipode is an antihomomorphism") {
  const Presentation P = slq2();
  CHECK(antipode(P.parse("a*b"), P) == E(P, "(-q^-1*b)*d"));
  CHECK(antipode(NCPoly(1), P) == NCPoly(1));
  const auto words = basis_words(P.rewrite(), 1);
  for (const auto& x : words)
    for (const auto& y : words) {
      const NCPoly X = NCPoly::monomial(x), Y = NCPoly::monomial(y);
      CHECK(antipode(X * Y, P) == P.reduce(antipode(Y, P) * antipode(X, P)));
    }
}

TEST_CASE("S^2 and S^4 are conjugations by F and F^2") {
  const Presentation P = slq2();
  // F = diag(q^-1, q): (F w F^-1)_ij = F_i F_j^-1 w_ij.
  CHECK(S2(P, "a") == E(P, "a"));
  CHECK(S2(P, "b") == E(P, "q^-2*b"));
  CHECK(S2(P, "c") == E(P, "q^2*c"));
  CHECK(S2(P, "d") == E(P, "d"));
  const NCPoly s4 = antipode(antipode(S2(P, "b"), P), P);
  CHECK(s4 == E(P, "q^-4*b"));
}

TEST_CASE("SL_q(3) antipode inverts w") {
  const Presentation P = slqN(3);
  const auto Sw = derive_antipode(P);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      NCPoly right, left;
      for (int j = 0; j < 3; ++j) {
        right += P.w(i, j) * Sw[static_cast<std::size_t>(j * 3 + k)];
        left += Sw[static_cast<std::size_t>(i * 3 + j)] * P.w(j, k);
      }
      CHECK(P.reduce(right) == NCPoly(i == k ? 1 : 0));
      CHECK(P.reduce(left) == NCPoly(i == k ? 1 : 0));
    }
  for (const auto& s : Sw) CHECK(s.degree() == 2);
}

TEST_CASE("star structures") {
  const Presentation U = suq2();
  CHECK(star(U.parse("a"), U) == E(U, "d"));
  CHECK(star(U.parse("b"), U) == E(U, "-q*c"));
  CHECK(star(star(U.parse("a*b"), U), U) == E(U, "a*b"));
  CHECK(check_b_matrix(U, Matrix::identity(2)).passed());

  const Presentation R = slq2R();
  for (const char* g : {"a", "b", "c", "d"}) CHECK(star(R.parse(g), R) == E(R, g));
  CHECK(star(R.parse("q*a"), R) == E(R, "q^-1*a"));

  const Presentation V = suq11();
  CHECK(check_b_matrix(V, Matrix::diagonal({S("1"), S("-1")})).passed());
  const Report wrong = check_b_matrix(V, Matrix::identity(2));
  CHECK_FALSE(wrong.passed());
  CHECK_FALSE(wrong.first_failure()->witness.empty());

  CHECK_THROWS_AS(star(slq2().parse("a"), slq2()), UnsupportedRegime);
}

TEST_CASE("Hopf axioms at low degree") {
  for (const Presentation& P : {slq2(), sl_t1_2(), suq2(), suq11(), slq2R()}) {
    CAPTURE(P.name());
    const Report r = check_hopf_axioms(P, 2);
    CAPTURE(r.to_text());
    CHECK(r.passed());
    CHECK(r.find("delta respects relations")->passed);
  }
}

TEST_CASE("a wrong E' breaks the antipode law") {
  const QScalar q = QScalar::q();
  const Presentation bad("bad", 2,
                         {Relation{"E", 0, 2, Matrix(4, 1, {S("0"), S("1"), -q, S("0")})},
                          Relation{"Ep", 2, 0, Matrix(1, 4, {S("0"), -q, S("1"), S("0")})}});
  const Report r = check_hopf_axioms(bad, 1);
  CHECK_FALSE(r.passed());
  const CheckResult* law = r.find("antipode law");
  REQUIRE(law != nullptr);
  CHECK_FALSE(law->passed);
  CHECK_FALSE(law->witness.empty());
  CHECK(r.find("antipode right inverse w·S(w) = 1")->passed);
}

TEST_CASE("characters of SL_q(2)") {
  const Presentation P = slq2();
  const QScalar a = S("3/2");
  const Character chi = character(a, P);
  CHECK(chi(P.parse("a")) == a);
  CHECK(chi(P.parse("d")) == S("2/3"));
  CHECK(chi(P.parse("b")) == S("0"));
  CHECK(chi(P.parse("a*d - q*b*c")) == S("1"));
  const auto words = basis_words(P.rewrite(), 2);
  for (const auto& x : words)
    for (const auto& y : words) {
      const NCPoly X = NCPoly::monomial(x), Y = NCPoly::monomial(y);
      CHECK(chi(X * Y) == chi(X) * chi(Y));
    }
  CHECK_THROWS_AS(character(a, slqN(3)), UnsupportedRegime);
}
