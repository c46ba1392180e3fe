// Serial reference against the OpenMP kernels: enumeration oracle on single
// complexes, and whole fuzz runs.

#include <benchmark/benchmark.h>

#include "basechange/fuzz.hpp"

using namespace basechange;

namespace {

// A complex whose middle module has |A|^rank elements and a nontrivial
// incoming map, so both the kernel and image passes do real work.
FreeComplex oracle_workload(const RingDescriptor& ring, std::size_t rank) {
  FuzzConfig cfg;
  cfg.ring = ring;
  cfg.num_degrees = 3;
  cfg.max_rank = rank;
  for (std::uint64_t t = 0;; ++t) {
    FreeComplex c = random_complex(cfg, t);
    if (c.rank(0) == rank && c.rank(1) == rank) return c;
  }
}

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_CohomologyOrder(benchmark::State& state) {
  const FreeComplex c = oracle_workload(RingDescriptor::zmod_pk(3, 2), 5);
  for (auto _ : state) benchmark::DoNotOptimize(brute_cohomology_order(c, 1, kDefaultEnumerationCap, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_PhiSurjective(benchmark::State& state) {
  const FreeComplex c = oracle_workload(RingDescriptor::trunc_poly_fp(2, 3), 5);
  for (auto _ : state) benchmark::DoNotOptimize(brute_phi_surjective(c, 1, kDefaultEnumerationCap, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_Fuzz(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.ring = RingDescriptor::zmod_pk(2, 3);
  cfg.num_degrees = 5;
  cfg.max_rank = 5;
  cfg.trials = 100;
  for (auto _ : state) benchmark::DoNotOptimize(run_fuzz(cfg, mode(state)).degrees_checked);
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_CohomologyOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiSurjective)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fuzz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
