// Serial reference kernels against the OpenMP versions. Shapes follow the
// MNIST MLP (784-256-128) at batch 64 and the 20001-node quadrature grid.

#include <benchmark/benchmark.h>

#include <vector>

#include "bolt/kernels.hpp"
#include "bolt/rng.hpp"

namespace {

using bolt::Matrix;
namespace k = bolt::kernels;

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  bolt::Rng rng(seed);
  Matrix m(r, c);
  for (double& v : m.flat()) v = bolt::standard_normal(rng);
  return m;
}

template <bool Parallel>
void BM_AffineForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = static_cast<std::size_t>(state.range(1));
  const auto out = static_cast<std::size_t>(state.range(2));
  const Matrix x = random_matrix(n, in, 1), w = random_matrix(in, out, 2);
  const std::vector<double> b(out, 0.1);
  Matrix y;
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::affine_forward(x, w, b, y);
    } else {
      k::reference::affine_forward(x, w, b, y);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * in * out));
}

template <bool Parallel>
void BM_Backprop(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = static_cast<std::size_t>(state.range(1));
  const auto out = static_cast<std::size_t>(state.range(2));
  const Matrix x = random_matrix(n, in, 3), w = random_matrix(in, out, 4), d = random_matrix(n, out, 5);
  Matrix d_in, dw(in, out);
  std::vector<double> db(out);
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::backprop_input(d, w, d_in);
      k::weight_gradient(x, d, 1.0 / static_cast<double>(n), dw, db);
    } else {
      k::reference::backprop_input(d, w, d_in);
      k::reference::weight_gradient(x, d, 1.0 / static_cast<double>(n), dw, db);
    }
    benchmark::DoNotOptimize(dw.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * in * out));
}

template <bool Parallel>
void BM_Trapezoid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> v(n);
  bolt::Rng rng(6);
  for (double& x : v) x = rng.uniform();
  for (auto _ : state) {
    const double s = Parallel ? k::trapezoid(v, 1e-3) : k::reference::trapezoid(v, 1e-3);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void MlpShapes(benchmark::internal::Benchmark* b) {
  b->Args({64, 784, 256})->Args({64, 256, 128})->Args({1024, 784, 256})->Args({100, 100, 50});
}

}  // namespace

BENCHMARK(BM_AffineForward<false>)->Name("affine_forward/reference")->Apply(MlpShapes);
BENCHMARK(BM_AffineForward<true>)->Name("affine_forward/openmp")->Apply(MlpShapes);
BENCHMARK(BM_Backprop<false>)->Name("backprop/reference")->Apply(MlpShapes);
BENCHMARK(BM_Backprop<true>)->Name("backprop/openmp")->Apply(MlpShapes);
BENCHMARK(BM_Trapezoid<false>)->Name("trapezoid/reference")->Arg(20001)->Arg(1 << 20);
BENCHMARK(BM_Trapezoid<true>)->Name("trapezoid/openmp")->Arg(20001)->Arg(1 << 20);

BENCHMARK_MAIN();
