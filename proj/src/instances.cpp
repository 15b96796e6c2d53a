#include "sqw/instances.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <vector>

namespace sqw {

TransitionMatrix two_node_example() {
  return TransitionMatrix::from_rows({{0.1, 0.2}, {0.9, 0.8}});
}

ProbabilityVector two_node_initial() { return ProbabilityVector({0.8, 0.2}); }

TransitionMatrix star_core_example() {
  constexpr std::size_t n = 7;
  // undirected weights; self-loops take the remainder of each column
  constexpr std::array<std::tuple<std::size_t, std::size_t, double>, 7> edges{{
      {0, 3, 0.20},
      {1, 3, 0.35},
      {2, 3, 0.25},
      {3, 4, 0.20},
      {4, 5, 0.30},
      {4, 6, 0.40},
      {5, 6, 0.50},
  }};
  std::vector<double> g(n * n, 0.0);
  for (const auto& [a, b, w] : edges) {
    g[a * n + b] = w;
    g[b * n + a] = w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) off += j == i ? 0.0 : g[j * n + i];
    g[i * n + i] = std::max(0.0, 1.0 - off);
  }
  return TransitionMatrix(n, std::move(g));
}

TransitionMatrix circulant_example() {
  constexpr std::size_t n = 7;
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    g[((i + 1) % n) * n + i] = 0.45;
    g[((i + n - 1) % n) * n + i] = 0.25;
    g[((i + 3) % n) * n + i] = 0.30;
  }
  return TransitionMatrix(n, std::move(g));
}

}  // namespace sqw
