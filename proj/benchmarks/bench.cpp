#include <benchmark/benchmark.h>

#include <random>

#include "fouralg/classify.hpp"
#include "fouralg/cohomology.hpp"
#include "fouralg/morphgal.hpp"

using namespace fouralg;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 4);
  Matrix m(F5, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar::of_int(F5, d(rng));
  return m;
}

void BM_rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank)->Arg(4)->Arg(8)->Arg(16);

void BM_is_four_algebra(benchmark::State& state) {
  Algebra a = heisenberg(F5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_four_algebra(a).ok());
}
BENCHMARK(BM_is_four_algebra)->Arg(1)->Arg(2)->Arg(3);

void BM_validate_crossed(benchmark::State& state) {
  CrossedData cd = CrossedData::zero(dim2_A1(F5), 2);
  cd.act.t(1, 0, 0) = Scalar::one(F5);
  for (auto _ : state)
    benchmark::DoNotOptimize(validate_crossed_system(cd).pass());
}
BENCHMARK(BM_validate_crossed);

void BM_gh2_11(benchmark::State& state) {
  Algebra a = abelian(F5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gh2(a, 1).classes.size());
}
BENCHMARK(BM_gh2_11);

void BM_classify_dim2(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_brute(F5, 2).classes.size());
}
BENCHMARK(BM_classify_dim2);

void BM_galois_zero_system(benchmark::State& state) {
  CrossedData cd = CrossedData::zero(abelian(F5, 1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(galois_group(cd).order());
}
BENCHMARK(BM_galois_zero_system);

}  // namespace

BENCHMARK_MAIN();
