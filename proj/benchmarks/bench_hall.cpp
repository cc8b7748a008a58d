#include "dhall/config.hpp"
#include "dhall/hall_derived.hpp"
#include "dhall/labels.hpp"

#include <benchmark/benchmark.h>

using namespace dhall;

namespace {

Heart heart(const char* name, std::uint32_t p) {
  const QuiverConfig cfg = builtin_config(name, p);
  return Heart(cfg.quiver(), cfg.field());
}

// Fresh ClassicalHall per iteration so nothing is served from its caches.
void BM_ClassicalProduct(benchmark::State& state) {
  const Heart h = heart("A3", static_cast<std::uint32_t>(state.range(0)));
  const IsoClass x = parse_iso(h, "X12+S3"), y = parse_iso(h, "X23");
  for (auto _ : state) {
    ClassicalHall hall(h);
    benchmark::DoNotOptimize(hall.basis_product(x, y));
  }
}
BENCHMARK(BM_ClassicalProduct)->Arg(2)->Arg(3);

void BM_NormalFormProduct(benchmark::State& state) {
  const Heart h = heart("A2", 2);
  const GradedObject x = parse_graded(h, "X12[2]+S1[1]+S2[0]"), y = parse_graded(h, "S2[1]+X12[0]+S1[-1]");
  for (auto _ : state) {
    DerivedHall d(h);
    benchmark::DoNotOptimize(d.basis_product(x, y));
  }
}
BENCHMARK(BM_NormalFormProduct);

void BM_ConeHistogram(benchmark::State& state) {
  const Heart h = heart("A2", static_cast<std::uint32_t>(state.range(0)));
  const GradedObject x = parse_graded(h, "X12[1]+S1[0]"), z = parse_graded(h, "S2[1]+X12[0]");
  for (auto _ : state) benchmark::DoNotOptimize(cone_histogram(h, x, z));
}
BENCHMARK(BM_ConeHistogram)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
