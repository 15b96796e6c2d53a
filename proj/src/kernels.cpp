#include "sqw/kernels.hpp"

#include <algorithm>
#include <vector>

namespace sqw::kernels {

namespace {

// Below this node count a single state is too small to split across threads.
constexpr std::size_t kStateParallelThreshold = 48;
constexpr std::size_t kMatvecParallelThreshold = 256;

}  // namespace

void reflect(std::span<const double> proxy, std::size_t n, std::span<const Complex> in, std::span<Complex> out) {
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= kStateParallelThreshold)
  for (long ii = 0; ii < nn; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* psi = proxy.data() + i * n;
    const Complex* a = in.data() + i * n;
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) overlap += psi[k] * a[k];
    for (std::size_t k = 0; k < n; ++k) out[i * n + k] = 2.0 * overlap * psi[k] - a[k];
  }
}

void walk_step(std::span<const double> proxy, std::size_t n, std::span<const Complex> in,
               std::span<Complex> out) {
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= kStateParallelThreshold)
  for (long ii = 0; ii < nn; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* psi = proxy.data() + i * n;
    const Complex* a = in.data() + i * n;
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) overlap += psi[k] * a[k];
    for (std::size_t k = 0; k < n; ++k) out[k * n + i] = 2.0 * overlap * psi[k] - a[k];
  }
}

void walk_batch(std::span<const double> proxy, std::size_t n, std::span<Complex> states, std::size_t steps) {
  const std::size_t dim = n * n;
  const auto count = static_cast<long>(states.size() / dim);
#pragma omp parallel
  {
    std::vector<Complex> scratch(dim);
#pragma omp for schedule(static)
    for (long s = 0; s < count; ++s) {
      auto state = states.subspan(static_cast<std::size_t>(s) * dim, dim);
      for (std::size_t t = 0; t < steps; ++t) {
        serial::walk_step(proxy, n, state, scratch);
        std::copy(scratch.begin(), scratch.end(), state.begin());
      }
    }
  }
}

void marginal_columns(std::size_t n, std::span<const Complex> states, Marginal which, std::span<double> out) {
  const std::size_t dim = n * n;
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long cc = 0; cc < nn; ++cc) {
    const auto col = static_cast<std::size_t>(cc);
    const Complex* a = states.data() + col * dim;
    for (std::size_t row = 0; row < n; ++row) out[row * n + col] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t node = which == Marginal::first_register ? i : j;
        out[node * n + col] += std::norm(a[i * n + j]);
      }
    }
  }
}

void matvec(std::span<const double> m, std::size_t n, std::span<const double> p, std::span<double> out) {
  const auto nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= kMatvecParallelThreshold)
  for (long tt = 0; tt < nn; ++tt) {
    const auto to = static_cast<std::size_t>(tt);
    double acc = 0.0;
    for (std::size_t from = 0; from < n; ++from) acc += m[to * n + from] * p[from];
    out[to] = acc;
  }
}

}  // namespace sqw::kernels
