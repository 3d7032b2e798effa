#include <benchmark/benchmark.h>

#include "noset/construct.hpp"
#include "noset/counting.hpp"
#include "noset/field.hpp"
#include "noset/graph.hpp"
#include "noset/rng.hpp"
#include "noset/spectral.hpp"
#include "noset/verify.hpp"

using namespace noset;

namespace {

void bm_inner_product(benchmark::State& state) {
  SplitMix64 rng(1);
  PrimeModulus p(5);
  const auto u = sample_vector(p, 64, rng);
  const auto v = sample_vector(p, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(u, v));
}
BENCHMARK(bm_inner_product);

void bm_tensor_product(benchmark::State& state) {
  SplitMix64 rng(2);
  PrimeModulus p(3);
  std::vector<FieldVector> factors;
  for (int i = 0; i < 4; ++i) factors.push_back(sample_vector(p, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product(factors));
}
BENCHMARK(bm_tensor_product);

void bm_full_graph(benchmark::State& state) {
  const auto t = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(OrthoGraph::full_graph(PrimeModulus(2), t));
}
BENCHMARK(bm_full_graph)->Arg(6)->Arg(8)->Arg(10);

void bm_spectrum(benchmark::State& state) {
  const auto t = static_cast<std::uint32_t>(state.range(0));
  auto g = OrthoGraph::full_graph(PrimeModulus(2), t);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(bm_spectrum)->Arg(4)->Arg(6);

void bm_count_le_k(benchmark::State& state) {
  auto g = OrthoGraph::full_graph(PrimeModulus(2), 4);
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_bi_independent_le_k(g, k, true));
}
BENCHMARK(bm_count_le_k)->Arg(2)->Arg(4);

void bm_count_klfree(benchmark::State& state) {
  auto g = OrthoGraph::full_graph(PrimeModulus(3), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_klfree_subsets(g, 4, 3, true));
}
BENCHMARK(bm_count_klfree);

void bm_check_alpha(benchmark::State& state) {
  SplitMix64 rng(3);
  PrimeModulus p(3);
  std::vector<FieldVector> vs;
  while (vs.size() < 24) {
    auto v = sample_nso_vector(p, 5, rng);
    bool dup = false;
    for (const auto& u : vs) dup = dup || u == v;
    if (!dup) vs.push_back(std::move(v));
  }
  auto set = VectorSet::create(p, 5, std::move(vs));
  for (auto _ : state) benchmark::DoNotOptimize(check_alpha(set, 3));
}
BENCHMARK(bm_check_alpha);

void bm_construct(benchmark::State& state) {
  ParamOverrides ov;
  ov.t = 2;
  ov.m = 2;
  ov.n = 4;
  const auto params = derive_params(PrimeModulus(2), 4, 4, 2, 1.0, 11, 100, ov);
  for (auto _ : state) benchmark::DoNotOptimize(construct_verified(params));
}
BENCHMARK(bm_construct);

}  // namespace

BENCHMARK_MAIN();
