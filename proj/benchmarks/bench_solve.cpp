#include <benchmark/benchmark.h>

#include <random>

#include "cmopt/chambers.hpp"
#include "cmopt/geometry.hpp"
#include "cmopt/matroid.hpp"
#include "cmopt/objective.hpp"
#include "cmopt/solver.hpp"

namespace {

using namespace cmopt;

Instance random_instance(std::mt19937& rng, int n, int d) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Instance inst;
  inst.n = n;
  inst.d = d;
  for (int j = 0; j < n; ++j) {
    Vec w(static_cast<std::size_t>(d));
    for (double& v : w) v = u(rng);
    inst.weights.push_back(std::move(w));
  }
  return inst;
}

void BM_SolvePlanar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(42);
  Instance inst = random_instance(rng, n, 2);
  UniformMatroid m(n, n / 2);
  SqNorm obj(2);
  for (auto _ : state) {
    Solution s = solve(inst, m, obj);
    benchmark::DoNotOptimize(s.best.value);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolvePlanar)->RangeMultiplier(2)->Range(10, 160)->Complexity();

void BM_SolveSpatial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(43);
  Instance inst = random_instance(rng, n, 3);
  UniformMatroid m(n, n / 2);
  SqNorm obj(3);
  for (auto _ : state) {
    Solution s = solve(inst, m, obj);
    benchmark::DoNotOptimize(s.best.value);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveSpatial)->DenseRange(8, 24, 4)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ChamberSweep2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(44);
  Instance inst = random_instance(rng, n, 2);
  GeneratorSet gs = build_generators(inst);
  for (auto _ : state) {
    auto chs = enumerate_chambers_2d(gs);
    benchmark::DoNotOptimize(chs.size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChamberSweep2d)->RangeMultiplier(2)->Range(10, 160)->Complexity();

void BM_ChamberIncremental3d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(45);
  Instance inst = random_instance(rng, n, 3);
  GeneratorSet gs = build_generators(inst);
  for (auto _ : state) {
    auto chs = enumerate_chambers_nd(gs);
    benchmark::DoNotOptimize(chs.size());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ChamberIncremental3d)->DenseRange(8, 20, 4)->Complexity()->Unit(benchmark::kMillisecond);

void BM_SolveThreaded(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  std::mt19937 rng(46);
  Instance inst = random_instance(rng, 24, 3);
  UniformMatroid m(24, 12);
  SqNorm obj(3);
  SolveOptions opts;
  opts.threads = threads;
  for (auto _ : state) {
    Solution s = solve(inst, m, obj, opts);
    benchmark::DoNotOptimize(s.best.value);
  }
}
BENCHMARK(BM_SolveThreaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
