#include <doctest.h>

#include <complex>
#include <vector>

#include "sqw/kernels.hpp"
#include "sqw/random.hpp"
#include "sqw/szegedy.hpp"

using namespace sqw;

namespace {

std::vector<Complex> random_batch(std::size_t n, std::size_t count, WalkRng& rng) {
  std::vector<Complex> v(n * n * count);
  for (auto& x : v) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return v;
}

}  // namespace

TEST_CASE("parallel kernels agree bit for bit with the serial reference") {
  WalkRng rng(5);
  for (std::size_t n : {2u, 5u, 17u, 50u, 64u}) {
    const auto g = random_stochastic(n, rng);
    const SzegedyOperator op(g);
    const auto proxy = op.proxy_amplitudes();
    auto states = random_batch(n, n, rng);
    auto reference = states;

    std::vector<Complex> a(n * n), b(n * n);
    kernels::walk_step(proxy, n, std::span<const Complex>(states.data(), n * n), a);
    kernels::serial::walk_step(proxy, n, std::span<const Complex>(states.data(), n * n), b);
    CHECK(a == b);
    kernels::reflect(proxy, n, std::span<const Complex>(states.data(), n * n), a);
    kernels::serial::reflect(proxy, n, std::span<const Complex>(states.data(), n * n), b);
    CHECK(a == b);

    kernels::walk_batch(proxy, n, states, 3);
    kernels::serial::walk_batch(proxy, n, reference, 3);
    CHECK(states == reference);

    for (auto which : {kernels::Marginal::first_register, kernels::Marginal::second_register}) {
      std::vector<double> x(n * n), y(n * n);
      kernels::marginal_columns(n, states, which, x);
      kernels::serial::marginal_columns(n, reference, which, y);
      CHECK(x == y);
    }

    std::vector<double> p(n, 1.0 / static_cast<double>(n)), x(n), y(n);
    kernels::matvec(g.data(), n, p, x);
    kernels::serial::matvec(g.data(), n, p, y);
    CHECK(x == y);
  }
}

TEST_CASE("reflection is an involution") {
  WalkRng rng(8);
  const auto g = random_stochastic(6, rng);
  const SzegedyOperator op(g);
  const auto s = random_batch(6, 1, rng);
  std::vector<Complex> once(36), twice(36);
  kernels::serial::reflect(op.proxy_amplitudes(), 6, s, once);
  kernels::serial::reflect(op.proxy_amplitudes(), 6, once, twice);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(std::abs(twice[k] - s[k]) < 1e-10);
}
