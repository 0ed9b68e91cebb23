#include <benchmark/benchmark.h>

#include <vector>

#include "lsketch/generate.hpp"
#include "lsketch/orient.hpp"
#include "lsketch/preprocess.hpp"
#include "lsketch/query.hpp"
#include "lsketch/rng.hpp"
#include "lsketch/sketch_basic.hpp"
#include "lsketch/sketch_s2.hpp"
#include "lsketch/sparsify.hpp"

using namespace lsketch;

namespace {

WeightedGraph bench_graph(std::int64_t n) {
  return clique_chain(4, static_cast<std::uint32_t>(n / 4),
                      static_cast<std::uint32_t>(n - 3 * (n / 4)));
}

QueryVector bench_vector(std::uint32_t n, std::uint64_t salt) {
  Rng rng(derive_seed(977, "bench-vector", salt));
  QueryVector x(n);
  for (auto& v : x) v = 2.0 * rng.next_double() - 1.0;
  return x;
}

void BM_quadratic_form(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  const auto x = bench_vector(g.n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(quadratic_form(g, x));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(g.edges.size()));
}
BENCHMARK(BM_quadratic_form)->Arg(100)->Arg(200)->Arg(400);

void BM_preprocess(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(preprocess(g, 1.0));
}
BENCHMARK(BM_preprocess)->Arg(100)->Arg(200);

void BM_sparsify(benchmark::State& state) {
  const auto g = complete(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sparsify(g, 0.4, 7));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(g.edges.size()));
}
BENCHMARK(BM_sparsify)->Arg(100)->Arg(200);

void BM_orient(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assign_direction(g, 16.0, 3));
}
BENCHMARK(BM_orient)->Arg(100)->Arg(200)->Arg(400);

void BM_build_basic(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  SketchParams p;
  p.eps = 0.3;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_basic(g, p, ++seed));
}
BENCHMARK(BM_build_basic)->Arg(100)->Arg(200);

void BM_build_improved(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  SketchParams p;
  p.eps = 0.3;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_improved(g, p, ++seed));
}
BENCHMARK(BM_build_improved)->Arg(100)->Arg(200);

void BM_query_basic(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  SketchParams p;
  p.eps = 0.3;
  const auto sk = build_basic(g, p, 5).sketch;
  const auto x = bench_vector(g.n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_basic(sk, x));
}
BENCHMARK(BM_query_basic)->Arg(100)->Arg(200)->Arg(400);

void BM_query_improved(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  SketchParams p;
  p.eps = 0.3;
  const auto sk = build_improved(g, p, 5).sketch;
  const auto x = bench_vector(g.n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_improved(sk, x));
}
BENCHMARK(BM_query_improved)->Arg(100)->Arg(200)->Arg(400);

void BM_median_query(benchmark::State& state) {
  const auto g = bench_graph(200);
  SketchParams p;
  p.eps = 0.3;
  const auto file = build_sketch_file(g, p, Algo::improved, 5);
  const auto x = bench_vector(g.n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(median_query(file, x));
}
BENCHMARK(BM_median_query);

}  // namespace

BENCHMARK_MAIN();
