// Serial vs OpenMP timings for the sweep driver and the threshold scan.

#include <benchmark/benchmark.h>

#include "qtherm/entanglement.hpp"
#include "qtherm/sweep.hpp"
#include "qtherm/thermal.hpp"

using namespace qtherm;

namespace {

SweepConfig grid(std::size_t n, bool full_report) {
  SweepConfig cfg;
  cfg.mode = Mode::grid_b1b2;
  cfg.ranges[Axis::B1] = cfg.ranges[Axis::B2] = {-6.0, 6.0, n};
  if (full_report) cfg.measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  return cfg;
}

template <Execution E>
void BM_GridNegativity(benchmark::State& state) {
  const SweepConfig cfg = grid(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, E));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <Execution E>
void BM_GridFullReport(benchmark::State& state) {
  const SweepConfig cfg = grid(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, E));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <Execution E>
void BM_EstimateTs(benchmark::State& state) {
  const Spectrum s = sym_eig(hamiltonian_qutrit({-1.0, -1.7, 1.3, -1.3}));
  const StateMeasure neg = [](const DensityMatrix& r) { return negativity(r); };
  ThresholdScan scan;
  scan.grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_ts(s, kTwoQutrits, neg, scan, E));
}

}  // namespace

BENCHMARK(BM_GridNegativity<Execution::serial>)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridNegativity<Execution::parallel>)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridFullReport<Execution::serial>)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridFullReport<Execution::parallel>)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateTs<Execution::serial>)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateTs<Execution::parallel>)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
