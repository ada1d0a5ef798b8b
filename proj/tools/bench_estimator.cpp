// Serial vs OpenMP timings for the two sampling kernels.
#include <benchmark/benchmark.h>

#include "anglegauge/eps.hpp"
#include "anglegauge/sampling.hpp"

namespace {

using namespace anglegauge;

Matrix bench_matrix() {
  Rng rng(12345);
  return random_matrix(6, 6, rng);
}

void BM_EpsEmpiricalSerial(benchmark::State& state) {
  const Matrix t = bench_matrix();
  const AngleConstant c(0.3);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eps_hat_empirical_serial(t, c, samples, 7, false));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EpsEmpiricalParallel(benchmark::State& state) {
  const Matrix t = bench_matrix();
  const AngleConstant c(0.3);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eps_hat_empirical(t, c, samples, 7, false));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OrthScanSerial(benchmark::State& state) {
  const Matrix t = bench_matrix();
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_orthogonal_cosine_serial(t, samples, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OrthScanParallel(benchmark::State& state) {
  const Matrix t = bench_matrix();
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_orthogonal_cosine(t, samples, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_EpsEmpiricalSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_EpsEmpiricalParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_OrthScanSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_OrthScanParallel)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
