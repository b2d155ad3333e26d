#include <benchmark/benchmark.h>

#include "hb/bounds.hpp"
#include "hb/factor.hpp"
#include "hb/kernels.hpp"
#include "hb/matcore.hpp"
#include "hb/random.hpp"

namespace {

using hb::GramFactor;
using hb::HermitianView;
using hb::Index;
using hb::Matrix;

Matrix fixed_psd(Index n, Index rank) {
  hb::Rng rng(42);
  return hb::random_psd(rng, n, rank);
}

void bm_hadamard(benchmark::State& state) {
  const Index n = state.range(0);
  hb::Rng rng(1);
  const Matrix A = hb::random_matrix(rng, n, n);
  const Matrix B = hb::random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(hb::hadamard(A, B));
}
BENCHMARK(bm_hadamard)->Arg(16)->Arg(64)->Arg(256);

void bm_hermitian_eigen(benchmark::State& state) {
  const Index n = state.range(0);
  const HermitianView H{fixed_psd(n, n)};
  for (auto _ : state) benchmark::DoNotOptimize(hb::hermitian_eigen(H));
}
BENCHMARK(bm_hermitian_eigen)->Arg(16)->Arg(64)->Arg(128);

void bm_numerical_rank(benchmark::State& state) {
  const Index n = state.range(0);
  const Matrix M = fixed_psd(n, n / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(hb::numerical_rank(M));
}
BENCHMARK(bm_numerical_rank)->Arg(16)->Arg(64)->Arg(128);

void bm_main_lower_bound(benchmark::State& state) {
  const Index n = state.range(0);
  hb::Rng rng(7);
  const GramFactor A(hb::random_matrix(rng, n, n / 2 + 1));
  const GramFactor B(hb::random_matrix(rng, n, n / 3 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(main_lower_bound(A, B));
}
BENCHMARK(bm_main_lower_bound)->Arg(8)->Arg(32)->Arg(96);

void bm_gaussian_gram(benchmark::State& state) {
  const Index n = state.range(0);
  hb::Rng rng(11);
  hb::RealMatrix coords(n, 3);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < 3; ++k) coords(i, k) = rng.normal();
  const hb::PointSet ps(coords);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_gram(ps, 0.8));
}
BENCHMARK(bm_gaussian_gram)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
