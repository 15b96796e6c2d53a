#include "sqw/cycle.hpp"

#include <algorithm>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

constexpr std::size_t kMinCycle = 3;

void check_cycle_size(std::size_t n) {
  if (n < kMinCycle) throw TooSmall(n, kMinCycle);
}

}  // namespace

TransitionMatrix cycle_graph(std::size_t n) { return cycle_semiclassical(n, 1); }

TransitionMatrix cycle_semiclassical(std::size_t n, int t_q) {
  check_cycle_size(n);
  if (t_q < 1) throw InvalidArgument("quantum time must be >= 1");
  const std::size_t shift = static_cast<std::size_t>(t_q) % n;
  std::vector<double> g(n * n, 0.0);
  for (std::size_t from = 0; from < n; ++from) {
    const std::size_t forward = (from + shift) % n;
    const std::size_t backward = (from + n - shift) % n;
    if (forward == backward) {
      g[forward * n + from] = 1.0;
    } else {
      g[forward * n + from] = 0.5;
      g[backward * n + from] = 0.5;
    }
  }
  return TransitionMatrix(n, std::move(g));
}

CyclePrediction cycle_predictions(std::size_t n) {
  check_cycle_size(n);
  const int size = static_cast<int>(n);
  return {n, size / 2 + 1, size, n % 2 == 0 ? size : 2 * size};
}

std::vector<std::vector<std::size_t>> components(const TransitionMatrix& m, double threshold) {
  const std::size_t n = m.size();
  // reach[a * n + b]: b reachable from a
  std::vector<char> reach(n * n, 0);
  for (std::size_t from = 0; from < n; ++from) {
    reach[from * n + from] = 1;
    for (std::size_t to = 0; to < n; ++to) {
      if (m(to, from) > threshold) reach[from * n + to] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!reach[a * n + k]) continue;
      for (std::size_t b = 0; b < n; ++b) reach[a * n + b] |= reach[k * n + b];
    }
  }

  std::vector<std::vector<std::size_t>> parts;
  std::vector<char> assigned(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<std::size_t> part;
    for (std::size_t b = a; b < n; ++b) {
      if (reach[a * n + b] && reach[b * n + a]) {
        part.push_back(b);
        assigned[b] = 1;
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace sqw
