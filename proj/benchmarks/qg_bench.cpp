#include <benchmark/benchmark.h>

#include "qg/corep.hpp"
#include "qg/haar.hpp"
#include "qg/hopf.hpp"
#include "qg/rewrite.hpp"
#include "qg/sphere.hpp"

namespace {

using namespace qg;

// Reduction of every word of length n over a, b, c, d, from a fresh rewrite system.
void BM_ReduceAllWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Presentation P = slq2();
  const auto words = basis_words(RewriteSystem(4, MonomialOrder::deglex(4), {}), n);
  for (auto _ : state) {
    const RewriteSystem R(4, P.order(), P.rewrite().rules());
    std::size_t terms = 0;
    for (const auto& w : words) terms += R.reduce_word(w).size();
    benchmark::DoNotOptimize(terms);
  }
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_ReduceAllWords)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CheckHopf(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Presentation P = slq2();
    benchmark::DoNotOptimize(check_hopf_axioms(P, degree).passed());
  }
}
BENCHMARK(BM_CheckHopf)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CheckHopfSLq3(benchmark::State& state) {
  for (auto _ : state) {
    const Presentation P = slqN(3);
    benchmark::DoNotOptimize(check_hopf_axioms(P, 2).passed());
  }
}
BENCHMARK(BM_CheckHopfSLq3)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SpinCorep(benchmark::State& state) {
  const int two_l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Presentation P = slq2();
    benchmark::DoNotOptimize(spin_corep(two_l, P).dim());
  }
}
BENCHMARK(BM_SpinCorep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ClebschGordan(benchmark::State& state) {
  const int two_a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Presentation P = slq2();
    benchmark::DoNotOptimize(clebsch_gordan_check(two_a, two_a, P).report.passed());
  }
}
BENCHMARK(BM_ClebschGordan)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PWBasis(benchmark::State& state) {
  const int two_L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PWBasis B(suq2(), two_L);
    benchmark::DoNotOptimize(B.entries().size());
  }
}
BENCHMARK(BM_PWBasis)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_HaarDegree4(benchmark::State& state) {
  const PWBasis B(suq2(), 4);
  const auto words = basis_words(B.presentation().rewrite(), 4);
  for (auto _ : state) {
    QScalar s;
    for (const auto& w : words) s += haar(NCPoly::monomial(w), B);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HaarDegree4)->Unit(benchmark::kMillisecond);

void BM_SphereCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_sphere(QScalar::q(), SphereParameter::infinite()).passed());
}
BENCHMARK(BM_SphereCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
