#include <benchmark/benchmark.h>

#include "hessenpave/fforacle.hpp"
#include "hessenpave/lemmata.hpp"
#include "hessenpave/paving.hpp"
#include "hessenpave/witness.hpp"

using namespace hessenpave;

namespace {

LieType type_of(int code) { return static_cast<LieType>(code); }

void BM_RootSystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(type_of(state.range(0)), state.range(1)));
}
BENCHMARK(BM_RootSystem)->Args({0, 8})->Args({1, 8})->Args({3, 8});

void BM_Chevalley(benchmark::State& state) {
  auto rs = build_root_system(type_of(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_chevalley(rs));
}
BENCHMARK(BM_Chevalley)->Args({1, 4})->Args({2, 4})->Args({3, 4})->Args({1, 6})->Unit(benchmark::kMillisecond);

// Every cell of every Hessenberg space.
void BM_PavingSweep(benchmark::State& state) {
  auto rs = build_root_system(type_of(state.range(0)), state.range(1));
  auto weyl = enumerate_weyl(rs);
  auto spaces = enumerate_hessenberg(rs);
  auto rd = rows(*rs);
  for (auto _ : state)
    for (const auto& h : spaces) benchmark::DoNotOptimize(compute_paving(weyl, h, rd));
  state.counters["spaces"] = static_cast<double>(spaces.size());
}
BENCHMARK(BM_PavingSweep)->Args({0, 4})->Args({1, 4})->Args({3, 4})->Args({0, 5})->Unit(benchmark::kMillisecond);

void BM_HessenbergEnumeration(benchmark::State& state) {
  auto rs = build_root_system(type_of(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hessenberg(rs));
}
BENCHMARK(BM_HessenbergEnumeration)->Args({0, 6})->Args({1, 5})->Unit(benchmark::kMillisecond);

// Longest element against the full space: every stage has the most variables.
void BM_WitnessLongest(benchmark::State& state) {
  auto rs = build_root_system(type_of(state.range(0)), state.range(1));
  auto real = build_chevalley(rs);
  if (rs->type() == LieType::D) real = normalize_type_D(real);
  auto w0 = enumerate_weyl(rs).back();
  auto g = full_space(rs);
  auto n = default_nilpotent(*rs);
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(real, w0, g, n));
}
BENCHMARK(BM_WitnessLongest)->Args({0, 3})->Args({1, 3})->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_VerifyLemmata(benchmark::State& state) {
  auto real = build_chevalley(build_root_system(type_of(state.range(0)), state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemmata(real, 20, 1));
}
BENCHMARK(BM_VerifyLemmata)->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  std::vector<int> h(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(n, q, h));
}
BENCHMARK(BM_CountPoints)->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
