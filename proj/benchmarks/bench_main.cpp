#include <benchmark/benchmark.h>

#include <vector>

#include "njcones/combinatorics.hpp"
#include "njcones/enumerate.hpp"
#include "njcones/newick.hpp"
#include "njcones/nj.hpp"
#include "njcones/sampling.hpp"

using namespace njcones;

static void BM_SampleUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(123);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_uniform(n, rng));
  }
}
BENCHMARK(BM_SampleUniform)->Arg(4)->Arg(8)->Arg(32);

static void BM_RunNj(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<DissimilarityMap> inputs;
  for (int i = 0; i < 64; ++i) {
    RandomStream rng = RandomStream::for_sample(7, i);
    inputs.push_back(sample_uniform(n, rng));
  }
  std::size_t i = 0;
  RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_nj(inputs[i++ % inputs.size()], TieBreakPolicy::Lexicographic,
               rng));
  }
}
BENCHMARK(BM_RunNj)->Arg(5)->Arg(8)->Arg(32);

static void BM_SampleAndKey(benchmark::State& state) {
  // One full Monte Carlo sample: draw, run both branches, canonical keys.
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    RandomStream rng = RandomStream::for_sample(99, i++);
    const DissimilarityMap d = sample_uniform(n, rng);
    const NjBothResult both = run_nj_both(d, TieBreakPolicy::Uniform, rng);
    benchmark::DoNotOptimize(serialize(both.chosen));
    benchmark::DoNotOptimize(serialize(both.other));
  }
}
BENCHMARK(BM_SampleAndKey)->Arg(4)->Arg(5)->Arg(8);

static void BM_MotzkinTriangle(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(motzkin_triangle(kmax));
  }
}
BENCHMARK(BM_MotzkinTriangle)->Arg(16)->Arg(64)->Arg(256);

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_agglomerated_trees(n));
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
