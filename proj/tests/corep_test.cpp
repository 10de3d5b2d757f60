#include "qg/corep.hpp"
#include "qg/error.hpp"
#include "qg/hopf.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::E;
using qg::test::S;

namespace {

std::vector<NCPoly> parse_all(const Presentation& P, std::initializer_list<const char*> texts) {
  std::vector<NCPoly> r;
  for (const char* t : texts) r.push_back(E(P, t));
  return r;
}

// v·S(v) and S(v)·v with S applied entrywise.
bool inverse_by_antipode(const CorepMatrix& v) {
  const Presentation& P = v.presentation();
  const std::size_t n = v.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      NCPoly right, left;
      for (std::size_t j = 0; j < n; ++j) {
        right += v(i, j) * antipode(v(j, k), P);
        left += antipode(v(i, j), P) * v(j, k);
      }
      if (P.reduce(right) != NCPoly(i == k ? 1 : 0) || P.reduce(left) != NCPoly(i == k ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("fundamental and trivial corepresentations") {
  const Presentation P = slq2();
  const CorepMatrix w = fundamental(P);
  CHECK(w.entries() == parse_all(P, {"a", "b", "c", "d"}));
  CHECK(fundamental(slqN(3)).dim() == 3);
  CHECK(trivial(P).dim() == 1);
  CHECK(trivial(P)(0, 0) == NCPoly(1));
  CHECK(check_corep(P, 2, parse_all(P, {"a", "b", "c", "d"})).passed());
  CHECK_FALSE(check_corep(P, 2, parse_all(P, {"a", "c", "b", "d"})).passed());
  CHECK_THROWS_AS(CorepMatrix(P, 2, parse_all(P, {"d", "b", "c", "a"})), InvariantViolation);
}

TEST_CASE("sums and tensor products") {
  const Presentation P = slq2();
  const CorepMatrix w = fundamental(P);
  const CorepMatrix s = direct_sum(w, w);
  CHECK(s.dim() == 4);
  CHECK(s(0, 2).is_zero());
  CHECK(s(3, 3) == E(P, "d"));
  const CorepMatrix t = tensor_prod(w, w);
  CHECK(t(0, 0) == E(P, "a*a"));
  CHECK(t(1, 2) == E(P, "b*c"));  // row (1,2), column (2,1): w_12 w_21
  const CorepMatrix u = tensor_prod(trivial(P), w);
  CHECK(u.entries() == w.entries());
  CHECK_THROWS_AS(direct_sum(w, fundamental(suq2())), AlphabetMismatch);
}

TEST_CASE("contragredient") {
  const Presentation P = slq2();
  const CorepMatrix w = fundamental(P);
  const CorepMatrix wc = contragredient(w);
  CHECK(wc.entries() == parse_all(P, {"d", "-q*c", "-q^-1*b", "a"}));
  CHECK(contragredient(trivial(P)).entries() == trivial(P).entries());
  // w^cc = F w F^-1 with F = diag(q^-1, q).
  const CorepMatrix wcc = contragredient(wc);
  CHECK(wcc.entries() == parse_all(P, {"a", "q^-2*b", "q^2*c", "d"}));
}

TEST_CASE("intertwiner spaces") {
  const Presentation P = slq2();
  const CorepMatrix w = fundamental(P), one = trivial(P), ww = tensor_prod(w, w);
  const auto ww_ = mor_space(w, w);
  REQUIRE(ww_.size() == 1);
  CHECK(ww_[0] == Matrix::identity(2));
  const auto e = mor_space(one, ww);
  REQUIRE(e.size() == 1);
  // Spanned by E = (0, 1, -q, 0).
  const Matrix& A = e[0];
  CHECK(A(0, 0).is_zero());
  CHECK(A(3, 0).is_zero());
  CHECK(A(2, 0) == A(1, 0) * S("-q"));
  CHECK(mor_space(w, ww).empty());
  for (const auto& M : mor_space(ww, ww)) {
    // Each intertwiner satisfies A v = w A entrywise.
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) {
        NCPoly l, r;
        for (std::size_t j = 0; j < 4; ++j) {
          l.add_scaled(ww(j, k), M(i, j));
          r.add_scaled(ww(i, j), M(j, k));
        }
        CHECK(P.reduce(l) == P.reduce(r));
      }
  }
  CHECK(mor_space(ww, ww).size() == 2);
}

TEST_CASE("spin corepresentations") {
  const Presentation P = slq2();
  CHECK(spin_corep(1, P).entries() == fundamental(P).entries());
  CHECK(spin_corep(0, P).entries() == trivial(P).entries());
  const CorepMatrix v1 = spin_corep(2, P);
  CHECK(v1.dim() == 3);
  for (const auto& x : v1.entries()) CHECK(x.degree() == 2);
  CHECK(mor_space(v1, v1).size() == 1);
  CHECK(inverse_by_antipode(fundamental(P)));
  CHECK(inverse_by_antipode(v1));
  for (int two_l = 0; two_l <= 3; ++two_l) CHECK(check_corep(P, two_l + 1, spin_corep(two_l, P).entries()).passed());
}

TEST_CASE("spin 1 at q = 1 is the classical symmetric square") {
  const Presentation P = slq2(S("1"));
  // Columns are images of e1⊗e1, e1⊗e2 + e2⊗e1, e2⊗e2 under w⊗w.
  const auto want = parse_all(P, {"a^2", "2*a*b", "b^2", "a*c", "a*d+b*c", "b*d", "c^2", "2*c*d", "d^2"});
  CHECK(spin_corep(2, P).entries() == want);
}

TEST_CASE("Schur's lemma and Clebsch-Gordan up to spin 3/2") {
  const Presentation P = slq2();
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(mor_space(spin_corep(a, P), spin_corep(b, P)).size() == (a == b ? 1u : 0u));
    }
  const CGTable half = clebsch_gordan_check(1, 1, P);
  CHECK(half.multiplicity == std::map<int, std::size_t>{{0, 1}, {1, 0}, {2, 1}});
  const CGTable t = clebsch_gordan_check(2, 1, P);
  CHECK(t.multiplicity == std::map<int, std::size_t>{{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  CHECK(t.report.passed());
  const CGTable unit = clebsch_gordan_check(0, 2, P);
  CHECK(unit.multiplicity.at(2) == 1);
}

TEST_CASE("intertwiner dimensions do not depend on the generator order") {
  const Presentation P = slq2();
  const Presentation R("slq2", 2, P.relations(), {}, P.alphabet(), MonomialOrder::deglex(4));
  REQUIRE_FALSE(R.order() == P.order());
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      CHECK(mor_space(spin_corep(a, P), spin_corep(b, P)).size() ==
            mor_space(spin_corep(a, R), spin_corep(b, R)).size());
  CHECK(mor_space(trivial(R), tensor_prod(fundamental(R), fundamental(R))).size() == 1);
}

TEST_CASE("kernels of intertwiners are invariant") {
  const Presentation P = slq2();
  const CorepMatrix w = fundamental(P);
  const CorepMatrix v = direct_sum(w, spin_corep(2, P));
  const auto mor = mor_space(v, w);
  REQUIRE(mor.size() == 1);
  const auto kernel = mor[0].nullspace();
  REQUIRE(kernel.size() == 3);
  Matrix K(5, kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j)
    for (std::size_t i = 0; i < 5; ++i) K(i, j) = kernel[j][i];
  const CorepMatrix sub = subcorep(v, K);
  CHECK(sub.dim() == 3);
  CHECK(mor_space(sub, spin_corep(2, P)).size() == 1);
  // A span that is not invariant is rejected.
  Matrix bad(5, 1);
  bad(0, 0) = S("1");
  bad(2, 0) = S("1");
  CHECK_THROWS_AS(subcorep(v, bad), InvariantViolation);
}

TEST_CASE("Lorentz twisting matrices") {
  Matrix flip(4, 4);
  flip(0, 0) = flip(1, 2) = flip(2, 1) = flip(3, 3) = S("1");
  const Presentation U1 = suq2(S("1"));
  const Report ok = check_lorentz_X(flip, U1, Involution::identity);
  CAPTURE(ok.to_text());
  CHECK(ok.passed());
  CHECK(ok.find("(v) τ·conj(X)·τ = c·X")->detail == "c = 1");

  const Report zero = check_lorentz_X(Matrix(4, 4), U1, Involution::identity);
  CHECK_FALSE(zero.find("(iv) X invertible")->passed);

  const Report id = check_lorentz_X(Matrix::identity(4), suq2(), Involution::identity);
  const CheckResult* iii = id.find("(iii) X(w⊗w̄) = (w̄⊗w)X");
  REQUIRE(iii != nullptr);
  CHECK_FALSE(iii->passed);
  CHECK(iii->witness == "entry (1,1): (-q^-1+q)*b*c");
}
