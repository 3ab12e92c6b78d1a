#include <benchmark/benchmark.h>

#include <numbers>

#include "qagent/gadget.hpp"
#include "qagent/metrics.hpp"
#include "qagent/scenarios.hpp"

using namespace qagent;

namespace {

void BM_Kron(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Matrix a = random_unitary(d, 1);
  const Matrix b = random_unitary(d, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8);

void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = densify(max_entangled(d));
  const std::vector<int> dims{d, d};
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho.mat, dims, {0}));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(8);

void BM_Evolve(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Matrix h = simul_hamiltonian(d);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(evolve(h, t));
  }
}
BENCHMARK(BM_Evolve)->Arg(2)->Arg(3);

void BM_ResultChannel(benchmark::State& state) {
  const auto g = random_gadget(2, 4, 4, 3);
  const auto rho = random_density(2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(result_channel(g, rho));
  }
}
BENCHMARK(BM_ResultChannel);

void BM_Uncertainty(benchmark::State& state) {
  const auto g = make_dephased_swap(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uncertainty(g));
  }
}
BENCHMARK(BM_Uncertainty)->Arg(2)->Arg(3);

void BM_SweepPoint(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    t += 1e-4;
    benchmark::DoNotOptimize(simul_sweep(t, t + 1.0, 2));
  }
}
BENCHMARK(BM_SweepPoint);

void BM_FullSweep600(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(simul_sweep(0.0, 2.0 * std::numbers::pi / 3.0, 600));
  }
}
BENCHMARK(BM_FullSweep600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
