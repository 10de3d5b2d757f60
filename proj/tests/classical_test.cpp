#include "qg/corep.hpp"
#include "qg/haar.hpp"
#include "qg/hecke.hpp"
#include "qg/hopf.hpp"
#include "qg/rewrite.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::E;
using qg::test::S;

TEST_CASE("SL(2) at q = 1 is commutative") {
  const Presentation P = slq2(S("1"));
  const auto gens = basis_words(P.rewrite(), 1);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const NCPoly X = NCPoly::monomial(x), Y = NCPoly::monomial(y);
      CHECK(P.reduce(X * Y) == P.reduce(Y * X));
    }
  CHECK(E(P, "a*d - b*c") == NCPoly(1));
}

TEST_CASE("classical antipode is the adjugate and an involution") {
  const Presentation P = slq2(S("1"));
  const auto Sw = derive_antipode(P);
  CHECK(Sw[0] == E(P, "d"));
  CHECK(Sw[1] == E(P, "-b"));
  CHECK(Sw[2] == E(P, "-c"));
  CHECK(Sw[3] == E(P, "a"));
  for (const char* g : {"a", "b", "c", "d"}) CHECK(antipode(antipode(P.parse(g), P), P) == E(P, g));
}

TEST_CASE("classical Hecke data") {
  Matrix flip(4, 4);
  flip(0, 0) = flip(1, 2) = flip(2, 1) = flip(3, 3) = S("1");
  CHECK(hecke_sigma(2, 1, S("1")).matrix == flip);
  CHECK(symmetrizer(2, S("1")) == Matrix::identity(4) + flip);
  CHECK(slq2(S("1")).relations()[0].E == Matrix(4, 1, {S("0"), S("1"), S("-1"), S("0")}));
  // The symmetrizer on three letters sums all six permutations.
  const Matrix s3 = symmetrizer(3, S("1"));
  CHECK(s3(0, 0) == S("6"));
  CHECK(s3(1, 2) == S("2"));
}

TEST_CASE("classical SU(2)") {
  const Presentation P = suq2(S("1"));
  CHECK(f_matrix(1, P).matrix == Matrix::identity(2));
  const PWBasis B(P, 2);
  CHECK(haar(P.parse("a*a^*"), B) == S("1/2"));
  CHECK(haar(P.parse("b*b^*"), B) == S("1/2"));
  CHECK(check_hopf_axioms(P, 2).passed());
  // The modular automorphism is trivial: h is a trace.
  CHECK(modular_sigma(P.parse("a*b"), P) == E(P, "a*b"));
}

TEST_CASE("symbolic identities specialize at q = 1") {
  const Presentation Pq = slq2();
  const Presentation P1 = slq2(S("1"));
  for (const char* t : {"d*a", "b*a*c", "d*d*a*a", "c*b*a"}) {
    const NCPoly generic = E(Pq, t);
    const NCPoly at1 = generic.map_coefficients([](const QScalar& c) { return QScalar(c.evaluate_at(Rational(1))); });
    CHECK(P1.reduce(at1) == E(P1, t));
  }
}
