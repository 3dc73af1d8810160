#include <benchmark/benchmark.h>

#include "chowtree/group.hpp"
#include "chowtree/linalg.hpp"
#include "chowtree/poly.hpp"
#include "chowtree/rng.hpp"

using namespace chowtree;

namespace {

QMatrix random_matrix(Rng& rng, size_t k, long magnitude) {
  QMatrix a(k, QVector(k));
  for (auto& row : a) {
    for (auto& x : row) x = Rational(rng.uniform_int(-magnitude, magnitude));
  }
  return a;
}

void BM_SolveAffineLinear(benchmark::State& state) {
  const size_t k = static_cast<size_t>(state.range(0));
  Rng rng(42);
  const QMatrix a = random_matrix(rng, k, 1000000);
  QVector b(k);
  for (auto& x : b) x = Rational(rng.uniform_int(-1000000, 1000000));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_affine_linear(a, b));
  }
}
BENCHMARK(BM_SolveAffineLinear)->Arg(2)->Arg(4)->Arg(6);

void BM_PolyMultiply(benchmark::State& state) {
  Rng rng(7);
  std::vector<Rational> ca(static_cast<size_t>(state.range(0)));
  std::vector<Rational> cb(static_cast<size_t>(state.range(0)));
  for (auto& x : ca) x = rng.small_rational(100, 7);
  for (auto& x : cb) x = rng.small_rational(100, 7);
  const RationalPoly a{std::move(ca)};
  const RationalPoly b{std::move(cb)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMultiply)->Arg(8)->Arg(32);

void BM_Canonicalize(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  Configuration c;
  c.dimension = d;
  for (int i = 0; i < 6; ++i) {
    std::vector<Rational> coords(static_cast<size_t>(d));
    for (auto& x : coords) x = rng.small_rational(50, 9);
    c.points.push_back(ConfigPoint::affine(AffinePoint(std::move(coords))));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(c));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(1)->Arg(3);

}  // namespace
