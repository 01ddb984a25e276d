#include <benchmark/benchmark.h>

#include <cmath>

#include "specmoore/bounds.hpp"
#include "specmoore/graphs.hpp"
#include "specmoore/lp.hpp"
#include "specmoore/orthopoly.hpp"
#include "specmoore/table1.hpp"

namespace {

using namespace specmoore;

void BM_LargestRootG(benchmark::State& state) {
  PolynomialFamily fam(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(largest_root(fam, RootFamily::G, 8).value);
  }
}
BENCHMARK(BM_LargestRootG)->Arg(3)->Arg(10);

void BM_VUpper(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const double theta = 0.9 * 2.0 * std::sqrt(r - 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(v_upper(r, theta).bound);
  }
}
BENCHMARK(BM_VUpper)->Arg(3)->Arg(8);

void BM_QuotientSpectrum(benchmark::State& state) {
  QuotientSpec spec;
  spec.r = 4;
  spec.t = static_cast<int>(state.range(0));
  spec.c = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(spec).lambda2);
  }
}
BENCHMARK(BM_QuotientSpectrum)->Arg(4)->Arg(8);

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_table1().size());
  }
}
BENCHMARK(BM_Table1);

void BM_GraphSpectrum(benchmark::State& state) {
  LabeledGraph hs = build_named("hoffmanSingleton");
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_of(hs).lambda2);
  }
}
BENCHMARK(BM_GraphSpectrum);

void BM_NonBacktracking(benchmark::State& state) {
  LabeledGraph petersen = build_named("petersen");
  for (auto _ : state) {
    benchmark::DoNotOptimize(non_backtracking_counts(petersen, static_cast<int>(state.range(0))).counts.size());
  }
}
BENCHMARK(BM_NonBacktracking)->Arg(4)->Arg(8);

void BM_Certificate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem5_certificate(4, 5, 1.5).coeffs.size());
  }
}
BENCHMARK(BM_Certificate);

}  // namespace

BENCHMARK_MAIN();
