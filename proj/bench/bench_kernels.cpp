// Serial reference kernels against their OpenMP versions on random matrices.

#include <random>

#include <benchmark/benchmark.h>

#include "sttilt/ffla/kernels.hpp"

using namespace sttilt::ffla;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  std::vector<Elt> data(n * n);
  for (auto& x : data) x = static_cast<Elt>(d(rng));
  return Matrix(f, n, n, std::move(data));
}

template <void (*Gemm)(const Matrix&, const Matrix&, Matrix&)>
void bm_gemm(benchmark::State& st) {
  const auto& f = Field::get(2, 2);
  const auto n = static_cast<std::size_t>(st.range(0));
  const Matrix a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  Matrix c(f, n, n);
  for (auto _ : st) {
    Gemm(a, b, c);
    benchmark::DoNotOptimize(c);
  }
}

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void bm_rref(benchmark::State& st) {
  const auto& f = Field::get(3, 1);
  const auto n = static_cast<std::size_t>(st.range(0));
  const Matrix a = random_matrix(f, n, 3);
  for (auto _ : st) {
    Matrix m = a;
    benchmark::DoNotOptimize(Rref(m));
  }
}

}  // namespace

BENCHMARK(bm_gemm<gemm_serial>)->Name("gemm_serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_gemm<gemm_omp>)->Name("gemm_omp")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_rref<rref_serial>)->Name("rref_serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_rref<rref_omp>)->Name("rref_omp")->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
