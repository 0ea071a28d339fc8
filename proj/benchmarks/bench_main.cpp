#include <benchmark/benchmark.h>

#include <random>

#include "gaussq/census.hpp"
#include "gaussq/primality.hpp"
#include "gaussq/quotient.hpp"
#include "gaussq/sieve.hpp"

using namespace gaussq;

static void BM_IsPrime32(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> d(1ULL << 20, 1ULL << 32);
  std::vector<std::uint64_t> xs(4096);
  for (auto& x : xs) x = d(rng) | 1;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(xs[i++ & 4095]));
}
BENCHMARK(BM_IsPrime32);

static void BM_IsPrime64(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<std::uint64_t> xs(4096);
  for (auto& x : xs) x = rng() | 1;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(xs[i++ & 4095]));
}
BENCHMARK(BM_IsPrime64);

static void BM_Classify(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
  std::vector<GaussianInt> zs;
  for (int i = 0; i < 4096; ++i) zs.emplace_back(d(rng), d(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(zs[i++ & 4095]));
}
BENCHMARK(BM_Classify);

static void BM_Pi3(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pi3(x, {kDefaultSegmentSize, 1}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * x));
}
BENCHMARK(BM_Pi3)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

static void BM_SieveSegment(benchmark::State& state) {
  const std::uint64_t lo = 1'000'000'000'000ULL;
  for (auto _ : state) benchmark::DoNotOptimize(sieve_range(lo, lo + (1 << 20)).count());
}
BENCHMARK(BM_SieveSegment)->Unit(benchmark::kMillisecond);

static void BM_CensusFig2b(benchmark::State& state) {
  const Sector s = table_spec(TableId::kFig2b).sector;
  const double rho = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sector_census(s, rho).n);
}
BENCHMARK(BM_CensusFig2b)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_FindQuotient(benchmark::State& state) {
  const AnnularRegion reg(Sector(Angle::from_radians(0.7), 0.01, Bounds::kOpen), 1.0, 1.05);
  for (auto _ : state) benchmark::DoNotOptimize(find_quotient(reg).q);
}
BENCHMARK(BM_FindQuotient)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
