#include <benchmark/benchmark.h>

#include "subcubic/canonical.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/exact.hpp"
#include "subcubic/random_graph.hpp"
#include "subcubic/spectral.hpp"
#include "subcubic/verify.hpp"

using namespace subcubic;

namespace {

Graph sample(int n) {
  Rng rng(static_cast<std::uint64_t>(n));
  return random_connected_graph(rng, n, 3, n / 4);
}

void BM_Eigenvalues(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(g));
}
BENCHMARK(BM_Eigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CharPoly(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16)->Arg(24);

void BM_Classify(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(12)->Arg(16);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(20)->Arg(40);

void BM_EnumConnected(benchmark::State& state) {
  EnumSpec spec;
  spec.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_connected(spec, [](const Graph&) {}));
}
BENCHMARK(BM_EnumConnected)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_EnumTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_trees(n, 3, [](const Graph&) {}));
}
BENCHMARK(BM_EnumTrees)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
