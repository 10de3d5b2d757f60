#include "qg/error.hpp"
#include "qg/haar.hpp"
#include "qg/hopf.hpp"
#include "qg/rewrite.hpp"
#include "support.hpp"

using namespace qg;
using qg::test::E;
using qg::test::S;

namespace {

const PWBasis& basis4() {
  static const PWBasis B(suq2(), 4);
  return B;
}

// Independent oracle: the functional on normal words of degree <= d solving
// (id⊗h)Δ(x) = h(x)·1 for every normal word x, normalized by h(1) = 1.
std::map<Word, QScalar> invariant_functional(const Presentation& P, int d) {
  const auto words = basis_words(P.rewrite(), d);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  const std::size_t one = words.size();  // column of the constant 1
  std::vector<SparseRow> rows;
  for (const auto& x : words) {
    std::map<Word, std::map<std::size_t, QScalar>> by_left;
    const TensorPoly dx = delta(NCPoly::monomial(x), P);
    for (const auto& [key, c] : dx.terms()) by_left[key[0]][index.at(key[1])] += c;
    by_left[Word{}][index.at(x)] -= QScalar(1);
    for (const auto& [left, coeffs] : by_left) {
      SparseRow r;
      for (const auto& [col, c] : coeffs)
        if (!c.is_zero()) r.emplace_back(col, c);
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  rows.push_back({{index.at(Word{}), QScalar(1)}, {one, QScalar(-1)}});
  const auto sol = nullspace(rows, words.size() + 1);
  REQUIRE(sol.size() == 1);
  std::map<Word, QScalar> h;
  for (const auto& w : words) h[w] = sol[0][index.at(w)] / sol[0][one];
  return h;
}

}  // namespace

TEST_CASE("Haar values against the invariance oracle") {
  const PWBasis& B = basis4();
  const auto oracle = invariant_functional(B.presentation(), 4);
  for (const auto& [w, value] : oracle) {
    CAPTURE(format_word(w, B.presentation().alphabet()));
    CHECK(haar(NCPoly::monomial(w), B) == value);
  }
}

TEST_CASE("Haar golden values") {
  const PWBasis B(suq2(), 2);
  const Presentation& P = B.presentation();
  CHECK(haar(P.parse("a*a^*"), B) == S("1/(1+q^2)"));
  CHECK(haar(NCPoly(1), B) == S("1"));
  CHECK(haar(P.parse("a"), B) == S("0"));
  CHECK(haar(P.parse("a*b"), B) == S("0"));
  CHECK(haar(P.parse("a*d"), B) == S("1") + haar(P.parse("q*b*c"), B));
  CHECK_THROWS_AS(haar(P.parse("a*a*d"), B), CutoffTooSmall);
  try {
    haar(P.parse("a*a*d*d*b"), B);
  } catch (const CutoffTooSmall& e) {
    CHECK(e.required_twice_l() == 5);
  }
}

TEST_CASE("F matrices") {
  const Presentation P = suq2();
  CHECK(f_matrix(0, P).matrix == Matrix::identity(1));
  CHECK(f_matrix(1, P).matrix == Matrix::diagonal({S("q^-1"), S("q")}));
  CHECK(f_matrix(2, P).matrix == Matrix::diagonal({S("q^-2"), S("1"), S("q^2")}));
  CHECK(f_matrix(3, P).matrix == Matrix::diagonal({S("q^-3"), S("q^-1"), S("q"), S("q^3")}));
  for (int a = 0; a <= 3; ++a) {
    const FMatrix F = f_matrix(a, P);
    CHECK(F.normalized);
    CHECK(F.matrix.trace() == F.matrix.inverse().trace());
  }
}

TEST_CASE("unitarizer of the fundamental corepresentation is scalar") {
  const Matrix U = unitarizer(fundamental(suq2()));
  CHECK(U == Matrix::identity(2) * U(0, 0));
}

TEST_CASE("orthogonality relations for small spins") {
  const PWBasis B(suq2(), 2);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      const Report r = check_pw_relations(a, b, B);
      CAPTURE(r.to_text());
      CHECK(r.passed());
    }
}

TEST_CASE("invariance, antipode invariance and the modular identity") {
  const PWBasis& B = basis4();
  CHECK(check_haar_invariance(B, 2).passed());
  CHECK(check_modular(B, 1).passed());
  const Presentation& P = B.presentation();
  CHECK(modular_sigma(P.parse("b"), P) == E(P, "b"));
  CHECK(modular_sigma(P.parse("a"), P) == E(P, "q^-2*a"));
}

TEST_CASE("Gram matrices are positive definite") {
  const PWBasis& B = basis4();
  for (const char* q0 : {"1/3", "1/2", "2/3"}) {
    const Report r = gram_positivity(1, Rational(q0), B);
    CAPTURE(r.to_text());
    CHECK(r.passed());
  }
}
