#include <benchmark/benchmark.h>

#include "casimir/convexity.hpp"
#include "casimir/euler_maclaurin.hpp"
#include "casimir/regularized_pressure.hpp"

namespace {

using namespace casimir;

CutoffSpec family(int64_t index, double a) {
  switch (index) {
    case 0:
      return CutoffSpec::exponential(a);
    case 1:
      return CutoffSpec::gaussian(a);
    default:
      return CutoffSpec::rational_power(8, a);
  }
}

void BM_LatticeDifference(benchmark::State& state) {
  const auto c = family(state.range(0), 1.0 / static_cast<double>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(D(c, PlateKind::ConductorPermeable));
  state.SetLabel(c.label());
}
BENCHMARK(BM_LatticeDifference)->ArgsProduct({{0, 1, 2}, {5, 40}})->Unit(benchmark::kMicrosecond);

void BM_Pressure(benchmark::State& state) {
  const auto c = family(state.range(0), 1.0);
  const PlateConfig config(PlateKind::ConductorPermeable, 1.0);
  const auto grid = default_a_grid();
  for (auto _ : state) benchmark::DoNotOptimize(pressure(config, c, grid, {}, state.range(1) != 0));
  state.SetLabel(c.label() + (state.range(1) ? " parallel" : " serial"));
}
BENCHMARK(BM_Pressure)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Decomposition(benchmark::State& state) {
  const auto c = CutoffSpec::exponential(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(interval_decomposition(c));
}
BENCHMARK(BM_Decomposition)->Unit(benchmark::kMillisecond);

void BM_ExactTailCorrection(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto d = odd_derivatives_at_zero(CutoffFamily::Gaussian, 0, Rational(1, 7), k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_correction(d, LatticeVariant::MidpointLattice, k));
  }
}
BENCHMARK(BM_ExactTailCorrection)->DenseRange(2, kMaxEulerMaclaurinOrder, 3);

}  // namespace

BENCHMARK_MAIN();
