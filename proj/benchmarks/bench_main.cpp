#include <benchmark/benchmark.h>

#include <random>

#include "hcms/codec.hpp"
#include "hcms/equiv.hpp"
#include "hcms/hcms.hpp"
#include "hcms/linalg.hpp"
#include "hcms/random.hpp"

namespace {

using namespace hcms;

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_IsPerfect(benchmark::State& state) {
  const auto code = hcms_for_a(static_cast<unsigned>(state.range(0))).code;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfect(code));
}
BENCHMARK(BM_IsPerfect)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Encode(benchmark::State& state) {
  const auto code = hcms_for_a(static_cast<unsigned>(state.range(0))).code;
  std::mt19937_64 rng(2);
  const auto x = random_source(3, code.length(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(encode(code, x));
}
BENCHMARK(BM_Encode)->DenseRange(3, 5);

void BM_HcmsDecode(benchmark::State& state) {
  const auto bundle = hcms_for_a(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(3);
  const auto y = encode(bundle.code, random_source(3, bundle.code.length(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(hcms_decode(bundle, y));
}
BENCHMARK(BM_HcmsDecode)->DenseRange(3, 5);

void BM_ReduceToGhcms(benchmark::State& state) {
  const auto code = hcms_a3().code;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_ghcms(code));
}
BENCHMARK(BM_ReduceToGhcms)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
