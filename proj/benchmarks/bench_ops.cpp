#include <benchmark/benchmark.h>

#include "scf/fixtures.hpp"
#include "scf/generator.hpp"
#include "scf/harness/builders.hpp"
#include "scf/pforcing.hpp"

using namespace scf;

namespace {

const Universe& fixture() {
  static const Universe u = fixtures::u1();
  return u;
}

struct AmalgScenario {
  Universe u;
  PCondition r, w;
  ModelId n;
};

const AmalgScenario& scenario() {
  static const AmalgScenario s = [] {
    SplitMix64 rng(12);
    Universe u = generateUniverse(rng.next(), GenParams{});
    ModelId n = harness::simpleCountables(u).front();
    PCondition p0 = harness::buildP(u, StationaryRef::unionSet(), rng, 3,
                                    harness::InsideModel{ModelRef::countable(n)});
    PCondition r = harness::makeDN(u, adjoinModel(u, p0, n), n);
    PCondition w = harness::strengthenPInside(u, restrictToCountable(u, r, n), rng, 4,
                                              harness::InsideModel{ModelRef::countable(n)});
    return AmalgScenario{std::move(u), std::move(r), std::move(w), std::move(n)};
  }();
  return s;
}

void BM_ValidateCondition(benchmark::State& state) {
  const Universe& u = fixture();
  PCondition p = fixtures::amalgamExpected(u);
  for (auto _ : state) benchmark::DoNotOptimize(validateP(u, p));
}
BENCHMARK(BM_ValidateCondition);

void BM_ValidateUniverse(benchmark::State& state) {
  const Universe& u = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(validateUniverse(u));
}
BENCHMARK(BM_ValidateUniverse);

void BM_AmalgCountable(benchmark::State& state) {
  const AmalgScenario& s = scenario();
  for (auto _ : state) benchmark::DoNotOptimize(amalgCountable(s.u, s.w, s.r, s.n));
}
BENCHMARK(BM_AmalgCountable);

void BM_RestrictCountable(benchmark::State& state) {
  const AmalgScenario& s = scenario();
  for (auto _ : state) benchmark::DoNotOptimize(restrictToCountable(s.u, s.r, s.n));
}
BENCHMARK(BM_RestrictCountable);

void BM_GenerateUniverse(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generateUniverse(++seed, GenParams{}));
}
BENCHMARK(BM_GenerateUniverse);

void BM_RemainderSet(benchmark::State& state) {
  const Universe& u = fixture();
  std::set<ModelId> a{"M0", "M2", "N"};
  for (auto _ : state) benchmark::DoNotOptimize(rStar(u, a));
}
BENCHMARK(BM_RemainderSet);

}  // namespace

BENCHMARK_MAIN();
