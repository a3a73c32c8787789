#include <benchmark/benchmark.h>

#include "berktrees/dynamics.hpp"

using namespace berktrees;

namespace {

PuiseuxSeries dense(int terms, long den) {
  std::vector<PuiseuxSeries::Term> out;
  for (int k = 0; k < terms; ++k) out.push_back({make_rational(k, den), ExactComplex(k + 1, 1)});
  return PuiseuxSeries::from_terms(std::move(out));
}

PuiseuxSeries tp(long n, long d = 1) { return series::t_pow(make_rational(n, d)); }

void BM_SeriesMul(benchmark::State& state) {
  const auto a = dense(static_cast<int>(state.range(0)), 2), b = dense(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(32);

void BM_SeriesDivide(benchmark::State& state) {
  const auto a = dense(static_cast<int>(state.range(0)), 2), b = dense(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(divide(a, b, state.range(0)));
}
BENCHMARK(BM_SeriesDivide)->Arg(8)->Arg(32);

void BM_ImageTypeII(benchmark::State& state) {
  const RationalMapL f({series::constant(1), {}, {}, tp(1)}, {{}, series::constant(1)});
  const TypeIIPoint x = canonicalize(PuiseuxSeries(), make_rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(image_typeII(f, x));
}
BENCHMARK(BM_ImageTypeII);

void BM_LimitTree(benchmark::State& state) {
  Family fam;
  for (int k = 0; k < state.range(0); ++k) {
    fam.emplace_back("x" + std::to_string(k), series::monomial(ExactComplex(k + 1), make_rational(k % 4 - 2, 1 + k % 3)));
  }
  fam.emplace_back("inf", PointP1L::infinity());
  for (auto _ : state) benchmark::DoNotOptimize(limit_tree(fam));
}
BENCHMARK(BM_LimitTree)->Arg(4)->Arg(8);

void BM_FindRescalings(benchmark::State& state) {
  const RationalMapL f({series::constant(1), {}, {}, tp(1)}, {{}, series::constant(1)});
  const std::vector<TypeIIPoint> seeds{TypeIIPoint::gauss(), canonicalize(PuiseuxSeries(), make_rational(1, 3))};
  for (auto _ : state) benchmark::DoNotOptimize(find_rescalings(f, seeds, 16, 4));
}
BENCHMARK(BM_FindRescalings);

}  // namespace
BENCHMARK_MAIN();
