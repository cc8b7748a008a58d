#include "dhall/field_matrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dhall;

namespace {

FpMatrix random_square(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Fp> entries(n * n);
  for (auto& e : entries) e = static_cast<Fp>(rng() % f.p());
  return FpMatrix(f, n, n, std::move(entries));
}

void BM_Rank(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint32_t>(state.range(1)));
  std::mt19937_64 rng(7);
  const FpMatrix m = random_square(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->ArgsProduct({{8, 32, 128}, {2, 3, 13}});

}  // namespace

BENCHMARK_MAIN();
