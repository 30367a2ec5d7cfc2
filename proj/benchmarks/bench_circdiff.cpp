#include <benchmark/benchmark.h>

#include "circdiff/geometry.hpp"
#include "circdiff/random.hpp"
#include "circdiff/schwarzian.hpp"
#include "circdiff/virasoro.hpp"

using namespace circdiff;

namespace {

const CircleDiffeo kB2(0.0, {0.0, 0.0}, {0.0, 0.2});

}  // namespace

static void BM_SpectralDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PeriodicSamples f = PeriodicSamples::sample(n, [](double t) { return std::sin(3 * t) + 0.2 * std::cos(t); });
  for (auto _ : state) benchmark::DoNotOptimize(spectral_derivative(f, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralDerivative)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNLogN);

static void BM_Compose(benchmark::State& state) {
  RandomSource rng(1);
  const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose);

static void BM_SchwarzianModified(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(schwarzian_modified(kB2, n));
}
BENCHMARK(BM_SchwarzianModified)->Arg(256)->Arg(1024);

static void BM_GaussianCurvature(benchmark::State& state) {
  const NullMetric g = NullMetric::curved(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_curvature(g, 0.3, 2.4));
}
BENCHMARK(BM_GaussianCurvature);

static void BM_DiagonalRestriction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_restriction(kB2, 1.0, 0.7));
}
BENCHMARK(BM_DiagonalRestriction);

// The dominant cost of the symplectic acceptance criterion.
static void BM_OmegaGeometric(benchmark::State& state) {
  const VectorFieldS1 a(0.0, {0.2, 0.1}, {0.0, 0.3}), b(0.1, {0.0, 0.4}, {0.2, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(omega_c_geometric(kB2, a, b, 1.5));
}
BENCHMARK(BM_OmegaGeometric)->Unit(benchmark::kMillisecond);

static void BM_BottThurston(benchmark::State& state) {
  RandomSource rng(2);
  const CircleDiffeo a = rng.diffeo(), b = rng.diffeo();
  for (auto _ : state) benchmark::DoNotOptimize(bott_thurston(a, b));
}
BENCHMARK(BM_BottThurston);

BENCHMARK_MAIN();
