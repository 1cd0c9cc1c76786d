#include <benchmark/benchmark.h>

#include <random>

#include "nhb/demazure.hpp"
#include "nhb/nilhecke.hpp"
#include "nhb/schur.hpp"

namespace {

void BM_DemazureLongest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nhb::ExtPoly f = nhb::staircase(n, nhb::Partition::zero(n)) * nhb::ExtPoly::odd(n, 1);
  nhb::SignedPerm w0 = nhb::longest_element(n);
  for (auto _ : state) benchmark::DoNotOptimize(nhb::demazure_w(w0, f));
}
BENCHMARK(BM_DemazureLongest)->DenseRange(1, 3);

void BM_NHMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  nhb::RandomNHSpec spec{n, 3, 2, n * n};
  nhb::NHElement a = nhb::random_nh(spec, rng), b = nhb::random_nh(spec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nhb::nh_mul(a, b));
}
BENCHMARK(BM_NHMul)->DenseRange(2, 3);

void BM_SchurExt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> beta;
  for (int i = 1; i <= n; ++i) beta.push_back(i);
  auto b = nhb::StrictPartition::from(beta, n);
  for (auto _ : state) benchmark::DoNotOptimize(nhb::schur_ext(nhb::Partition::zero(n), b, n));
}
BENCHMARK(BM_SchurExt)->DenseRange(1, 3);

void BM_DecomposeSchubert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nhb::ExtPoly f = nhb::random_poly(n, nhb::OddFamily::Omega, 4, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nhb::decompose_schubert(f));
}
BENCHMARK(BM_DecomposeSchubert)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
