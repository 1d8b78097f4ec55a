#include <benchmark/benchmark.h>

#include "commprob/constructors.hpp"
#include "commprob/isoclinism.hpp"
#include "commprob/probability.hpp"
#include "commprob/theorems.hpp"

using namespace commprob;

static void BM_GenerateSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  std::vector<Permutation> gens{Permutation(cycle), Permutation::from_cycles(n, {{0, 1}})};
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(n, gens).order());
}
BENCHMARK(BM_GenerateSymmetric)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses375(benchmark::State& state) {
  auto g = named("(C5xC5):C15");
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g).size());
}
BENCHMARK(BM_ConjugacyClasses375)->Unit(benchmark::kMillisecond);

static void BM_PairOracle375(benchmark::State& state) {
  auto g = named("(C5xC5):C15");
  for (auto _ : state) benchmark::DoNotOptimize(commuting_pairs_oracle(g));
}
BENCHMARK(BM_PairOracle375)->Unit(benchmark::kMillisecond);

static void BM_NormalSubgroups(benchmark::State& state) {
  auto g = named("C2xA4");
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g).size());
}
BENCHMARK(BM_NormalSubgroups)->Unit(benchmark::kMicrosecond);

static void BM_IsoclinicC2xA4A4(benchmark::State& state) {
  auto g = named("C2xA4");
  auto h = named("A4");
  for (auto _ : state) benchmark::DoNotOptimize(are_isoclinic(g, h));
}
BENCHMARK(BM_IsoclinicC2xA4A4)->Unit(benchmark::kMicrosecond);

static void BM_AutomorphismGroupC5xC5(benchmark::State& state) {
  auto g = named("C5xC5");
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismGroupC5xC5)->Unit(benchmark::kMillisecond);

static void BM_CatalogVerification(benchmark::State& state) {
  VerifyOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_catalog_verification(o).summary.failures);
}
BENCHMARK(BM_CatalogVerification)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
