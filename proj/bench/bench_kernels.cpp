// Serial reference against the OpenMP kernels on the same inputs.

#include "isodist/base.hpp"
#include "isodist/omega.hpp"
#include "isodist/oracle.hpp"
#include "isodist/parse.hpp"

#include <benchmark/benchmark.h>

using isodist::kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_ApexOracle(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(isodist::oracle::apex_oracle(isodist::Rational(1), 8, exec_of(st)));
  }
}

void BM_BaseOracle(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(isodist::oracle::base_oracle(isodist::Rational(1), 10, exec_of(st)));
  }
}

void BM_OmegaSearch(benchmark::State& st) {
  const isodist::Rational w(-72, 25);
  for (auto _ : st) {
    benchmark::DoNotOptimize(isodist::omega::search_representations(w, 40, exec_of(st)));
  }
}

void BM_BaseWitnessSearch(benchmark::State& st) {
  const auto t = isodist::base::BaseTriangle::from_theta_sq(isodist::ExactReal::parse("43/8+sqrt(825/64)"));
  for (auto _ : st) {
    benchmark::DoNotOptimize(isodist::base::search_witnesses(*t, 24, exec_of(st)));
  }
}

void BM_WitnessSweep(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(isodist::oracle::witness_sweep_equivalence(3, false, exec_of(st)));
  }
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP kernel.
BENCHMARK(BM_ApexOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaseOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BaseWitnessSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
