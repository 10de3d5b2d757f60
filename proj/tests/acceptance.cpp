// Acceptance harness: one PASS/FAIL line per criterion. All comparisons are
// exact over Q(q) or Q; the only numeric bounds are the wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qg/corep.hpp"
#include "qg/haar.hpp"
#include "qg/hecke.hpp"
#include "qg/hopf.hpp"
#include "qg/parse.hpp"
#include "qg/rewrite.hpp"
#include "qg/sphere.hpp"

namespace {

using namespace qg;

// Wall-clock budgets in seconds (0 = none).
constexpr double kBudgetConfluence = 10;
constexpr double kBudgetHopf = 60;
constexpr double kBudgetSpin = 300;
constexpr double kBudgetSphere = 60;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
  void require(const Report& r) {
    if (!r.passed()) {
      const CheckResult* f = r.first_failure();
      require(false, r.title + ": " + f->name + (f->witness.empty() ? "" : " [" + f->witness + "]"));
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget;
  std::function<Outcome()> run;
};

QScalar S(const std::string& t) { return parse_scalar(t); }
NCPoly E(const Presentation& P, const std::string& t) { return P.reduce(P.parse(t)); }

Matrix flip() {
  Matrix f(4, 4);
  f(0, 0) = f(1, 2) = f(2, 1) = f(3, 3) = QScalar(1);
  return f;
}

Outcome confluence() {
  Outcome o;
  const Presentation P = slq2();
  const auto pairs = critical_pairs(P.rewrite());
  for (const auto& cp : pairs)
    o.require(cp.difference.is_zero(), "critical pair " + format_word(cp.overlap, P.alphabet()) + " -> " +
                                           P.format(cp.difference));
  const std::size_t want[] = {1, 5, 14, 30, 55, 91};
  std::string dims;
  for (int d = 0; d <= 5; ++d) {
    std::size_t oracle = 0;
    for (int k = 1; k <= d + 1; ++k) oracle += static_cast<std::size_t>(k * k);
    const std::size_t got = basis_words(P.rewrite(), d).size();
    o.require(oracle == want[d] && got == oracle, "degree " + std::to_string(d) + ": " + std::to_string(got));
    dims += (d ? "," : "") + std::to_string(got);
  }
  if (o.passed) o.detail = std::to_string(pairs.size()) + " critical pairs; dims " + dims;
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  for (const Presentation& P : {slq2(), sl_t1_2(), slqN(3)}) {
    const Report r = check_hopf_axioms(P, 3);
    for (const char* name : {"coassociativity", "counit law", "antipode law"})
      o.require(r.find(name) != nullptr, P.name() + ": missing " + name);
    o.require(r);
  }
  for (const Presentation& P : {suq2(), suq11(), slq2R()}) {
    const Report r = check_hopf_axioms(P, 2);
    for (const char* name : {"Hopf-* axiom Δ(x*) = (*⊗*)Δx", "S∘*∘S∘* = id"})
      o.require(r.find(name) != nullptr, P.name() + ": missing " + name);
    o.require(r);
  }
  if (o.passed) o.detail = "slq2, sl_t1_2, slqN(3) to degree 3; suq2, suq11, slq2R to degree 2";
  return o;
}

Outcome antipode_formula() {
  Outcome o;
  const Presentation P = slq2();
  const auto Sw = derive_antipode(P);
  const char* want[] = {"d", "-q^-1*b", "-q*c", "a"};
  for (std::size_t i = 0; i < 4; ++i) o.require(Sw[i] == E(P, want[i]), "S(w) entry " + std::to_string(i));
  // diag(q^-1, q) w diag(q, q^-1): entry (i,j) scales by F_i / F_j.
  const QScalar F[2] = {S("q^-1"), S("q")};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const NCPoly s2 = antipode(antipode(P.w(i, j), P), P);
      o.require(s2 == P.w(i, j) * (F[i] / F[j]), "S²(w) entry (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) + ") = " + P.format(s2));
    }
  if (o.passed) o.detail = "S(w) = ((d,-q^-1*b),(-q*c,a)); S²(w) = F w F^-1";
  return o;
}

Outcome hecke() {
  Outcome o;
  const QScalar q = QScalar::q();
  for (int n = 2; n <= 4; ++n) {
    const Matrix Sn = symmetrizer(n);
    for (int k = 1; k < n; ++k) {
      const Matrix s = hecke_sigma(n, k).matrix;
      const Matrix I = Matrix::identity(s.rows());
      const std::string at = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
      o.require(((s - I) * (s + I * (q * q))).is_zero(), "quadratic" + at);
      o.require(((s - I) * Sn).is_zero(), "(σ_k-1)S_n" + at);
      if (k + 1 < n) {
        const Matrix t = hecke_sigma(n, k + 1).matrix;
        o.require(s * t * s == t * s * t, "braid" + at);
      }
      for (int j = k + 2; j < n; ++j) {
        const Matrix t = hecke_sigma(n, j).matrix;
        o.require(s * t == t * s, "distance" + at);
      }
    }
  }
  std::string dims;
  for (int n = 1; n <= 6; ++n) {
    const std::size_t d = sym_subspace(n).size();
    o.require(d == static_cast<std::size_t>(n + 1), "dim K^{n/2} for n=" + std::to_string(n));
    dims += (n > 1 ? "," : "") + std::to_string(d);
  }
  if (o.passed) o.detail = "n <= 4; dim K^{n/2} = " + dims;
  return o;
}

Outcome spin_tower() {
  Outcome o;
  const Presentation P = slq2();
  std::vector<CorepMatrix> v;
  for (int l = 0; l <= 3; ++l) {
    v.push_back(spin_corep(l, P));
    o.require(check_corep(P, static_cast<std::size_t>(l + 1), v.back().entries()));
  }
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      o.require(clebsch_gordan_check(a, b, P).report);
      const std::size_t dim = mor_space(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]).size();
      o.require(dim == (a == b ? 1u : 0u),
                "dim Mor(v^" + spin_label(a) + ", v^" + spin_label(b) + ") = " + std::to_string(dim));
    }
  if (o.passed) o.detail = "spins 0..3/2; 16 Clebsch-Gordan tables; Schur";
  return o;
}

const PWBasis& basis4() {
  static const PWBasis B(suq2(), 4);
  return B;
}

Outcome peter_weyl() {
  Outcome o;
  const PWBasis& B = basis4();
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) o.require(check_pw_relations(a, b, B));
  const QScalar h = haar(B.presentation().parse("a*a^*"), B);
  o.require(h == S("1/(1+q^2)"), "h(a a*) = " + h.to_string());
  o.require(check_modular(B, 2));
  if (o.passed) o.detail = "α,β <= 1; h(a a*) = " + h.to_string() + "; modular identity to degree 2";
  return o;
}

Outcome positivity() {
  Outcome o;
  std::string details;
  for (const char* q0 : {"1/3", "1/2", "2/3"}) {
    const Report r = gram_positivity(2, Rational(q0), basis4());
    o.require(r);
    details += std::string(details.empty() ? "" : "; ") + "q0=" + q0 + " " + r.checks.back().detail;
  }
  if (o.passed) o.detail = details;
  return o;
}

Outcome quantum_sphere() {
  Outcome o;
  const QScalar q = QScalar::q();
  o.require(check_sphere(q, SphereParameter::symbolic()));
  o.require(check_sphere(q, SphereParameter::infinite()));
  o.require(check_sphere(q, SphereParameter::c_of(2, q)));
  o.require(check_u1(suq2()));
  const Report control = check_coaction(SpherePresentation(q, SphereParameter::finite(QScalar(1))), QScalar(1));
  const CheckResult* rel = control.find("Γ preserves the relations");
  o.require(rel != nullptr && !rel->passed, "perturbed ρ was not detected");
  if (o.passed) o.detail = "symbolic c, c=∞, c=c(2); u¹ ≅ v¹; ρ+1 rejected";
  return o;
}

Outcome lorentz() {
  Outcome o;
  const Report classical = check_lorentz_X(flip(), suq2(S("1")), Involution::identity);
  for (const char* name : {"(iii) X(w⊗w̄) = (w̄⊗w)X", "(iv) X invertible", "(v) τ·conj(X)·τ = c·X",
                           "(vi) 1⊗E and (X⊗1)(1⊗X)(E⊗1) proportional"}) {
    const CheckResult* c = classical.find(name);
    o.require(c != nullptr && c->passed, std::string("flip at q=1: ") + name);
  }
  const CheckResult* c = classical.find("(v) τ·conj(X)·τ = c·X");
  o.require(c != nullptr && c->detail == "c = 1", "flip at q=1: c");
  const Report zero = check_lorentz_X(Matrix(4, 4), suq2(), Involution::identity);
  const CheckResult* iv = zero.find("(iv) X invertible");
  o.require(iv != nullptr && !iv->passed, "X = 0 passed (iv)");
  const Report identity = check_lorentz_X(Matrix::identity(4), suq2(), Involution::identity);
  const CheckResult* iii = identity.find("(iii) X(w⊗w̄) = (w̄⊗w)X");
  o.require(iii != nullptr && !iii->passed && !iii->witness.empty(), "X = 1 passed (iii)");
  if (o.passed) o.detail = "X=1 witness " + iii->witness;
  return o;
}

Outcome classical_limit() {
  Outcome o;
  const QScalar one(1);
  const Presentation P = slq2(one);
  o.require(hecke_sigma(2, 1, one).matrix == flip(), "σ at q=1 is not the flip");
  o.require(make_sigma_N(3, one) * make_sigma_N(3, one) == Matrix::identity(9), "σ_3 at q=1 is not an involution");
  o.require(make_antisym_E(2, one).first == Matrix(4, 1, {S("0"), S("1"), S("-1"), S("0")}),
            "E at q=1 is not the antisymmetrizer");
  const auto Sw = derive_antipode(P);
  const char* adj[] = {"d", "-b", "-c", "a"};
  for (std::size_t i = 0; i < 4; ++i) o.require(Sw[i] == E(P, adj[i]), "S(w) at q=1 is not the adjugate");
  for (const auto& x : basis_words(P.rewrite(), 1))
    for (const auto& y : basis_words(P.rewrite(), 1))
      o.require(P.reduce(NCPoly::monomial(x) * NCPoly::monomial(y)) ==
                    P.reduce(NCPoly::monomial(y) * NCPoly::monomial(x)),
                "SL(2) at q=1 is not commutative");
  o.require(check_hopf_axioms(P, 3));
  o.require(check_hopf_axioms(suq2(one), 2));
  // Generic normal forms specialize to the classical ones.
  const Presentation Pq = slq2();
  for (const auto& w : basis_words(RewriteSystem(4, MonomialOrder::deglex(4), {}), 3)) {
    const NCPoly x = NCPoly::monomial(w);
    const NCPoly at1 = Pq.reduce(x).map_coefficients([](const QScalar& c) { return QScalar(c.evaluate_at(1)); });
    o.require(P.reduce(at1) == P.reduce(x), "normal form of " + format_word(w, P.alphabet()) + " at q=1");
  }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) o.require(clebsch_gordan_check(a, b, P).report);
  const PWBasis B(suq2(one), 4);
  o.require(f_matrix(1, B.presentation()).matrix == Matrix::identity(2), "F at q=1 is not 1");
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) o.require(check_pw_relations(a, b, B));
  o.require(haar(B.presentation().parse("a*a^*"), B) == S("1/2"), "h(a a*) at q=1");
  o.require(check_sphere(one, SphereParameter::finite(S("2"))));
  if (o.passed) o.detail = "σ = flip, E antisymmetric, S = adjugate, commutative, F = 1, h(a a*) = 1/2";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "confluence and PBW dimensions", kBudgetConfluence, confluence},
      {2, "Hopf and Hopf-* axioms", kBudgetHopf, hopf_axioms},
      {3, "antipode formula and S²", 0, antipode_formula},
      {4, "Hecke relations and symmetrizer", 0, hecke},
      {5, "spin tower and Clebsch-Gordan", kBudgetSpin, spin_tower},
      {6, "Peter-Weyl relations and modular identity", 0, peter_weyl},
      {7, "Gram positivity", 0, positivity},
      {8, "quantum sphere coaction", kBudgetSphere, quantum_sphere},
      {9, "Lorentz checker", 0, lorentz},
      {10, "classical limit", 0, classical_limit},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && c.budget > 0 && secs > c.budget) {
      o.passed = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    all = all && o.passed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f", secs);
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.name << "  (" << o.detail
              << "; " << timing << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
