#include "sqw/random.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

std::vector<std::size_t> random_permutation(std::size_t n, WalkRng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
  return perm;
}

void check_size(std::size_t n) {
  if (n == 0) throw InvalidArgument("matrix needs at least one node");
}

}  // namespace

TransitionMatrix random_stochastic(std::size_t n, WalkRng& rng) {
  check_size(n);
  std::vector<double> g(n * n);
  for (std::size_t from = 0; from < n; ++from) {
    double sum = 0.0;
    for (std::size_t to = 0; to < n; ++to) {
      const double w = 1.0 - rng.uniform();  // (0, 1]
      g[to * n + from] = w;
      sum += w;
    }
    for (std::size_t to = 0; to < n; ++to) g[to * n + from] /= sum;
  }
  return TransitionMatrix(n, std::move(g));
}

TransitionMatrix random_symmetric_stochastic(std::size_t n, WalkRng& rng) {
  check_size(n);
  const std::size_t terms = n + 1;
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) {
    w = 1.0 - rng.uniform();
    total += w;
  }
  std::vector<double> g(n * n, 0.0);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto perm = random_permutation(n, rng);
    const double half = 0.5 * weights[t] / total;
    for (std::size_t from = 0; from < n; ++from) {
      g[perm[from] * n + from] += half;
      g[from * n + perm[from]] += half;
    }
  }
  // exact symmetry regardless of summation order
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g[b * n + a] = g[a * n + b];
  }
  return TransitionMatrix(n, std::move(g));
}

TransitionMatrix random_circulant_symmetric(std::size_t n, WalkRng& rng) {
  check_size(n);
  std::vector<double> offset_weight(n, 0.0);
  for (std::size_t d = 0; d <= n / 2; ++d) {
    const bool keep = d == 1 || rng.uniform() < 0.7;
    const double w = keep ? 1.0 - rng.uniform() : 0.0;
    offset_weight[d] = w;
    offset_weight[(n - d) % n] = w;
  }
  if (n == 1) offset_weight[0] = 1.0;
  double total = 0.0;
  for (double w : offset_weight) total += w;
  std::vector<double> g(n * n);
  for (std::size_t to = 0; to < n; ++to) {
    for (std::size_t from = 0; from < n; ++from) g[to * n + from] = offset_weight[(to + n - from) % n] / total;
  }
  return TransitionMatrix(n, std::move(g));
}

}  // namespace sqw
