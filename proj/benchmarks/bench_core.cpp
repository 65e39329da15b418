#include <benchmark/benchmark.h>

#include "hdet/hdet.hpp"

using namespace hdet;

static void BM_InvariantsDouble(benchmark::State& state) {
  Rng rng(1);
  const PureState4 s = sample_state(EnsembleKind::HaarState, rng);
  for (auto _ : state) benchmark::DoNotOptimize(invariants_of(s));
}
BENCHMARK(BM_InvariantsDouble);

static void BM_InvariantsExtended(benchmark::State& state) {
  Rng rng(1);
  const PureState4 s = sample_state(EnsembleKind::HaarState, rng);
  for (auto _ : state) benchmark::DoNotOptimize(invariants_of(s, Precision::Extended));
}
BENCHMARK(BM_InvariantsExtended);

static void BM_TangleDirect(benchmark::State& state) {
  const PureState3 s({1.0, cplx(0, 2), 0.0, -1.0, 0.5, 0.0, 3.0, cplx(1, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(tangle_direct(s));
}
BENCHMARK(BM_TangleDirect);

static void BM_EigHermitian(benchmark::State& state) {
  Rng rng(2);
  const Hamiltonian16 h = sample_matrix(EnsembleKind::GUE, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian);

static void BM_MinimizeSubspace(benchmark::State& state) {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({1.0}));
  const Level& zero = d.levels[2];
  for (auto _ : state) benchmark::DoNotOptimize(minimize_over_subspace(zero.basis, Invariant::S));
}
BENCHMARK(BM_MinimizeSubspace)->Unit(benchmark::kMillisecond);

static void BM_SuperpositionThermal(benchmark::State& state) {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({0.55}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        thermal_invariant(d, {1.0, ThermalMode::Superposition, Invariant::S}, superposition_defaults(1)));
  }
}
BENCHMARK(BM_SuperpositionThermal)->Unit(benchmark::kMillisecond);

static void BM_Ensemble(benchmark::State& state) {
  const auto kind = static_cast<EnsembleKind>(state.range(0));
  for (auto _ : state) {
    EnsembleSpec spec{kind, 1000, 1};
    spec.threads = 1;
    benchmark::DoNotOptimize(ensemble_hdet_stats(spec));
  }
  state.SetLabel(std::string(ensemble_name(kind)));
}
BENCHMARK(BM_Ensemble)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
