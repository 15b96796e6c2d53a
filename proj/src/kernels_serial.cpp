#include <algorithm>
#include <vector>

#include "sqw/kernels.hpp"

namespace sqw::kernels::serial {

void reflect(std::span<const double> proxy, std::size_t n, std::span<const Complex> in, std::span<Complex> out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* psi = proxy.data() + i * n;
    const Complex* a = in.data() + i * n;
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) overlap += psi[k] * a[k];
    for (std::size_t k = 0; k < n; ++k) out[i * n + k] = 2.0 * overlap * psi[k] - a[k];
  }
}

void walk_step(std::span<const double> proxy, std::size_t n, std::span<const Complex> in,
               std::span<Complex> out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* psi = proxy.data() + i * n;
    const Complex* a = in.data() + i * n;
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) overlap += psi[k] * a[k];
    // swap: component (i, k) lands on (k, i)
    for (std::size_t k = 0; k < n; ++k) out[k * n + i] = 2.0 * overlap * psi[k] - a[k];
  }
}

void walk_batch(std::span<const double> proxy, std::size_t n, std::span<Complex> states, std::size_t steps) {
  const std::size_t dim = n * n;
  const std::size_t count = states.size() / dim;
  std::vector<Complex> scratch(dim);
  for (std::size_t s = 0; s < count; ++s) {
    auto state = states.subspan(s * dim, dim);
    for (std::size_t t = 0; t < steps; ++t) {
      walk_step(proxy, n, state, scratch);
      std::copy(scratch.begin(), scratch.end(), state.begin());
    }
  }
}

void marginal_columns(std::size_t n, std::span<const Complex> states, Marginal which, std::span<double> out) {
  const std::size_t dim = n * n;
  for (std::size_t col = 0; col < n; ++col) {
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
  for (std::size_t to = 0; to < n; ++to) {
    double acc = 0.0;
    for (std::size_t from = 0; from < n; ++from) acc += m[to * n + from] * p[from];
    out[to] = acc;
  }
}

}  // namespace sqw::kernels::serial
