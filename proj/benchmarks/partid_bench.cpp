#include <benchmark/benchmark.h>

#include "partid/comb/partition.hpp"
#include "partid/comb/pbin.hpp"
#include "partid/exact/formal.hpp"
#include "partid/identity/genfunc.hpp"
#include "partid/identity/main_identity.hpp"
#include "partid/identity/proof_steps.hpp"
#include "partid/sweep/sweep.hpp"

namespace {

void BM_PartitionsOf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partid::partitions_of(n));
}
BENCHMARK(BM_PartitionsOf)->Arg(12)->Arg(20)->Arg(30);

// Fast generating-polynomial pbin against the composition expansion and the
// subset-enumeration oracle on the same diagram.
const partid::Partition kDiagram({5, 4, 3, 2});

void BM_Pbin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partid::pbin(kDiagram, 8));
}
BENCHMARK(BM_Pbin);

void BM_PbinExpanded(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(partid::pbin_expanded(kDiagram.parts(), 8));
  }
}
BENCHMARK(BM_PbinExpanded);

void BM_PbinOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partid::pbin_oracle(kDiagram, 8));
}
BENCHMARK(BM_PbinOracle);

void BM_LhsMain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partid::lhs_main({n, n / 2, 3}));
  }
}
BENCHMARK(BM_LhsMain)->Arg(8)->Arg(12)->Arg(16);

void BM_LhsCompositionForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partid::lhs_composition_form({n, n / 2, 3}));
  }
}
BENCHMARK(BM_LhsCompositionForm)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ReducedLhs(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partid::reduced_lhs(r, 3));
}
BENCHMARK(BM_ReducedLhs)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SeriesExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto f = partid::PolyX::x() * partid::series_log_inv(order);
  for (auto _ : state) benchmark::DoNotOptimize(partid::series_exp(f));
}
BENCHMARK(BM_SeriesExp)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_GenfuncChain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(partid::verify_genfunc_chain(3, 16));
  }
}
BENCHMARK(BM_GenfuncChain)->Unit(benchmark::kMillisecond);

void BM_DefaultSweep(benchmark::State& state) {
  partid::SweepConfig config;
  config.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partid::run_sweep(config));
}
BENCHMARK(BM_DefaultSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
