#include <benchmark/benchmark.h>

#include "chowtree/contract.hpp"
#include "chowtree/curves.hpp"
#include "chowtree/degeneration.hpp"
#include "chowtree/kunneth.hpp"
#include "chowtree/rng.hpp"
#include "chowtree/tree.hpp"

using namespace chowtree;

namespace {

StableTree caterpillar_tree(int d, int n, uint64_t seed) {
  // The deepest stratum shape: marks 1..n peel off one at a time.
  StratumSignature shape;
  shape.marks = {n};
  StratumSignature* cur = &shape;
  for (int label = n - 1; label >= 2; --label) {
    StratumSignature child;
    child.marks = {label};
    cur->children.push_back(std::move(child));
    cur = &cur->children[0];
  }
  cur->marks.push_back(1);
  std::sort(cur->marks.begin(), cur->marks.end());
  return random_tree(d, n, shape, seed);
}

void BM_OrbitClassInterior(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  Rng rng(11);
  Configuration c;
  c.dimension = d;
  while (c.n() < n) {
    std::vector<Rational> coords(static_cast<size_t>(d));
    for (auto& x : coords) x = rng.small_rational(20, 5);
    ConfigPoint p = ConfigPoint::affine(AffinePoint(std::move(coords)));
    bool dup = false;
    for (const auto& q : c.points) dup = dup || q == p;
    if (!dup) c.points.push_back(std::move(p));
  }
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_class(c, 3, seed++));
  }
}
BENCHMARK(BM_OrbitClassInterior)->Args({2, 5})->Args({3, 6});

void BM_CycleClassMaxDegenerate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const StableTree tree = caterpillar_tree(d, n, 5);
  const ConfigurationCycle z = configuration_cycle(tree);
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_class(z, 3, seed++));
  }
}
BENCHMARK(BM_CycleClassMaxDegenerate)->Args({2, 5})->Args({3, 6});

void BM_LimitTreeNested(benchmark::State& state) {
  const RationalPoly t = RationalPoly::t();
  FamilyConfiguration f;
  f.dimension = 1;
  RationalPoly acc;
  f.points.push_back({acc});
  for (int k = 1; k <= 5; ++k) {
    RationalPoly power = RationalPoly::constant(Rational(1));
    for (int i = 0; i < k; ++i) power = power * t;
    acc = acc + power;
    f.points.push_back({acc});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit_tree(f));
  }
}
BENCHMARK(BM_LimitTreeNested);

void BM_TripleInvariants(benchmark::State& state) {
  const StableTree tree = caterpillar_tree(1, 6, 17);
  for (auto _ : state) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = a + 1; b <= 6; ++b) {
        for (int c = b + 1; c <= 6; ++c) {
          benchmark::DoNotOptimize(triple_invariant(tree, {a, b, c}));
        }
      }
    }
  }
}
BENCHMARK(BM_TripleInvariants);

}  // namespace

BENCHMARK_MAIN();
