#include <benchmark/benchmark.h>

#include <random>

#include "ttg/adelic.hpp"
#include "ttg/homology.hpp"
#include "ttg/library.hpp"
#include "ttg/oracle.hpp"
#include "ttg/snf.hpp"
#include "ttg/torsion.hpp"

using namespace ttg;

namespace {

void BM_SnfInt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-20, 20);
  Mat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(A, World::integers()));
}
BENCHMARK(BM_SnfInt)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SnfValuation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  Mat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = Scalar::monomial(e(rng) - 1, e(rng), e(rng));
  for (auto _ : state) benchmark::DoNotOptimize(snf(A, World::V()));
}
BENCHMARK(BM_SnfValuation)->DenseRange(2, 6);

void BM_HomologyRandomInt(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<Complex> xs;
  for (int k = 0; k < 64; ++k) xs.push_back(random_complex(rng, World::integers(), {2, 3, 5}));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(homology(xs[k++ % xs.size()]));
}
BENCHMARK(BM_HomologyRandomInt);

void BM_UnitFractureValuation(benchmark::State& state) {
  Backend V = Backend::valrank2();
  for (auto _ : state) {
    AdelicCube C = adelic_cube(V);
    benchmark::DoNotOptimize(reconstruct_limit(adelic_unit(C), V.unit()));
  }
}
BENCHMARK(BM_UnitFractureValuation);

void BM_TorsRoundTripInt(benchmark::State& state) {
  Backend B = Backend::zint(PrimeSet::of({2, 3}));
  AdelicCube C = adelic_cube(B);
  const Complex& X = library_object("z2_plus_zloc3").X;
  for (auto _ : state) {
    TorsionModel T = tors(C, X);
    benchmark::DoNotOptimize(reconstruct(T, X));
  }
}
BENCHMARK(BM_TorsRoundTripInt);

void BM_TorsValidateValuation(benchmark::State& state) {
  Backend V = Backend::valrank2();
  AdelicCube C = adelic_cube(V);
  TorsionModel T = tors(C, library_object("v_plus_v_mod_x").X);
  for (auto _ : state) benchmark::DoNotOptimize(validate(V, T.diagram));
}
BENCHMARK(BM_TorsValidateValuation);

void BM_OracleSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_suite());
}
BENCHMARK(BM_OracleSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
