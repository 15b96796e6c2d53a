#include "sqw/graph.hpp"

#include <algorithm>
#include <cmath>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

std::vector<double> flatten_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch(n, row.size());
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

void check_square(std::size_t n, std::size_t entries) {
  if (n == 0) throw InvalidArgument("graph must have at least one node");
  if (entries != n * n) throw DimensionMismatch(n * n, entries);
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<double> weights) : n_(n), w_(std::move(weights)) {
  check_square(n_, w_.size());
  for (std::size_t to = 0; to < n_; ++to) {
    for (std::size_t from = 0; from < n_; ++from) {
      const double w = w_[to * n_ + from];
      if (!(w >= 0.0) || !std::isfinite(w)) throw NegativeWeight(to, from, w);
    }
  }
}

WeightedGraph WeightedGraph::from_rows(const std::vector<std::vector<double>>& rows) {
  return WeightedGraph(rows.size(), flatten_rows(rows));
}

void validate(std::size_t n, std::span<const double> entries) {
  check_square(n, entries.size());
  for (std::size_t to = 0; to < n; ++to) {
    for (std::size_t from = 0; from < n; ++from) {
      const double g = entries[to * n + from];
      if (!(g >= 0.0) || !(g <= 1.0 + kStochasticTolerance)) throw NegativeWeight(to, from, g);
    }
  }
  for (std::size_t from = 0; from < n; ++from) {
    double sum = 0.0;
    for (std::size_t to = 0; to < n; ++to) sum += entries[to * n + from];
    const double deviation = std::abs(sum - 1.0);
    if (deviation > kStochasticTolerance) throw NotStochastic(from, deviation);
  }
}

void validate(const TransitionMatrix& m) { validate(m.size(), m.data()); }

TransitionMatrix::TransitionMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), g_(std::move(entries)) {
  validate(n_, g_);
}

TransitionMatrix TransitionMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  return TransitionMatrix(rows.size(), flatten_rows(rows));
}

TransitionMatrix TransitionMatrix::identity(std::size_t n) {
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = 1.0;
  return TransitionMatrix(n, std::move(g));
}

std::vector<double> TransitionMatrix::column(std::size_t from) const {
  if (from >= n_) throw IndexOutOfRange(from, n_);
  std::vector<double> col(n_);
  for (std::size_t to = 0; to < n_; ++to) col[to] = g_[to * n_ + from];
  return col;
}

double TransitionMatrix::max_abs_diff(const TransitionMatrix& other) const {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  double worst = 0.0;
  for (std::size_t k = 0; k < g_.size(); ++k) worst = std::max(worst, std::abs(g_[k] - other.g_[k]));
  return worst;
}

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvalidArgument("probability vector must be nonempty");
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0)) throw InvalidArgument("probability vector has a negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kStochasticTolerance) {
    throw InvalidArgument("probability vector does not sum to 1");
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::delta(std::size_t n, std::size_t node) {
  if (node >= n) throw IndexOutOfRange(node, n);
  std::vector<double> p(n, 0.0);
  p[node] = 1.0;
  return ProbabilityVector(std::move(p));
}

TransitionMatrix from_weights(const WeightedGraph& w, FromWeightsOptions options) {
  const std::size_t n = w.size();
  std::vector<double> g(n * n);
  for (std::size_t from = 0; from < n; ++from) {
    double sum = 0.0;
    for (std::size_t to = 0; to < n; ++to) sum += w(to, from);
    if (!(sum > 0.0)) {
      if (!options.patch_dangling) throw DanglingNode(from);
      for (std::size_t to = 0; to < n; ++to) g[to * n + from] = 1.0 / static_cast<double>(n);
      continue;
    }
    for (std::size_t to = 0; to < n; ++to) g[to * n + from] = w(to, from) / sum;
  }
  return TransitionMatrix(n, std::move(g));
}

Classification classify(const TransitionMatrix& m, double tol) {
  const std::size_t n = m.size();
  Classification c{true, true};
  for (std::size_t to = 0; to < n; ++to) {
    for (std::size_t from = 0; from < n; ++from) {
      if (std::abs(m(to, from) - m(from, to)) > tol) c.symmetric = false;
      // circulant: compare against column 0 at the same offset
      const std::size_t offset = (to + n - from) % n;
      if (std::abs(m(to, from) - m(offset, 0)) > tol) c.homogeneous = false;
    }
  }
  return c;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace sqw
