#include <random>

#include <benchmark/benchmark.h>

#include "triosc/pipeline.hpp"
#include "triosc/scenario.hpp"

namespace {

using namespace triosc;

void BM_NormalModes(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Mat3 a;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) a(i, j) = a(j, i) = u(rng);
  }
  const CouplingMatrix m(a);
  for (auto _ : state) benchmark::DoNotOptimize(normal_modes(m));
}
BENCHMARK(BM_NormalModes);

void BM_JacobiEigen(benchmark::State& state) {
  Mat3 a;
  a << 9, -1.5, -4, -1.5, 25, -1.5, -4, -1.5, 9;
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(a));
}
BENCHMARK(BM_JacobiEigen);

void BM_State(benchmark::State& state) {
  const QuenchedSystem sys(QuenchSpec({3, 5, 3}, {1.5, 4, 1.5}, 0.01));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.state(t));
    t += 0.01;
  }
}
BENCHMARK(BM_State);

void BM_Report(benchmark::State& state) {
  const QuenchedSystem sys(QuenchSpec({3, 5, 3}, {1.5, 4, 1.5}, 0.01));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.report(t));
    t += 0.01;
  }
}
BENCHMARK(BM_Report);

void BM_Sweep(benchmark::State& state) {
  ScenarioConfig c;
  c.symmetry = Symmetry::bi_symmetric;
  c.omega0_sq = {9, 25, 9};
  c.c0 = {1.5, 4, 1.5};
  c.epsilon = Axis::grid(0.01, 1.0, 10);
  c.time = Axis::grid(0.0, 5.0, 51);
  const RunOptions opts{static_cast<int>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(c, opts));
  state.SetItemsProcessed(state.iterations() * 510);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
