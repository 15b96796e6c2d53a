// Parallel kernels against the serial reference on random graphs.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "sqw/kernels.hpp"

namespace {

using sqw::kernels::Complex;

struct Fixture {
  std::size_t n;
  std::vector<double> proxy;
  std::vector<double> matrix;
  std::vector<Complex> states;
  std::vector<double> p;

  Fixture(std::size_t size, bool with_states)
      : n(size), proxy(size * size), matrix(size * size), states(with_states ? size * size * size : 0), p(size) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // column-stochastic weights, proxy[i * n + k] = sqrt(G_ki)
    for (std::size_t i = 0; i < n; ++i) {
      double total = 0.0;
      for (std::size_t k = 0; k < n; ++k) total += (matrix[k * n + i] = u(gen));
      for (std::size_t k = 0; k < n; ++k) {
        matrix[k * n + i] /= total;
        proxy[i * n + k] = std::sqrt(matrix[k * n + i]);
      }
    }
    if (with_states)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) states[i * n * n + i * n + k] = proxy[i * n + k];
    for (auto& x : p) x = 1.0 / static_cast<double>(n);
  }
};

template <bool Parallel>
void walk_batch(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) {
    auto s = f.states;
    if constexpr (Parallel)
      sqw::kernels::walk_batch(f.proxy, f.n, s, 4);
    else
      sqw::kernels::serial::walk_batch(f.proxy, f.n, s, 4);
    benchmark::DoNotOptimize(s.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.n * 4));
}

template <bool Parallel>
void marginal_columns(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)), true);
  std::vector<double> out(f.n * f.n);
  for (auto _ : state) {
    if constexpr (Parallel)
      sqw::kernels::marginal_columns(f.n, f.states, sqw::kernels::Marginal::first_register, out);
    else
      sqw::kernels::serial::marginal_columns(f.n, f.states, sqw::kernels::Marginal::first_register, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void matvec(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)), false);
  std::vector<double> out(f.n);
  for (auto _ : state) {
    if constexpr (Parallel)
      sqw::kernels::matvec(f.matrix, f.n, f.p, out);
    else
      sqw::kernels::serial::matvec(f.matrix, f.n, f.p, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(walk_batch<false>)->Name("walk_batch/serial")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(walk_batch<true>)->Name("walk_batch/omp")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(marginal_columns<false>)->Name("marginal_columns/serial")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(marginal_columns<true>)->Name("marginal_columns/omp")->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(matvec<false>)->Name("matvec/serial")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(matvec<true>)->Name("matvec/omp")->RangeMultiplier(4)->Range(64, 1024);

BENCHMARK_MAIN();
