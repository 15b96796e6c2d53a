#include "sqw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <numeric>

#include "sqw/errors.hpp"
#include "sqw/kernels.hpp"
#include "sqw/rng.hpp"

namespace sqw {

namespace {

void check_dims(const TransitionMatrix& m, std::size_t p_size) {
  if (m.size() != p_size) throw DimensionMismatch(m.size(), p_size);
}

std::vector<double> transition_step(const TransitionMatrix& m, std::span<const double> p) {
  std::vector<double> out(m.size());
  kernels::matvec(m.data(), m.size(), p, out);
  return out;
}

bool is_fixed_point(const TransitionMatrix& m, const std::vector<double>& p, double tol) {
  return l1_distance(transition_step(m, p), p) < tol;
}

}  // namespace

ProbabilityVector evolve(const TransitionMatrix& m, const ProbabilityVector& p0, std::size_t t) {
  check_dims(m, p0.size());
  std::vector<double> p = p0.values();
  for (std::size_t step = 0; step < t; ++step) p = transition_step(m, p);
  return ProbabilityVector(std::move(p));
}

std::vector<ProbabilityVector> evolve_series(const TransitionMatrix& m, const ProbabilityVector& p0,
                                             std::size_t t) {
  check_dims(m, p0.size());
  std::vector<ProbabilityVector> series{p0};
  series.reserve(t + 1);
  for (std::size_t step = 0; step < t; ++step) {
    series.push_back(ProbabilityVector(transition_step(m, series.back().values())));
  }
  return series;
}

const char* to_string(LimitMode mode) noexcept {
  switch (mode) {
    case LimitMode::converged: return "converged";
    case LimitMode::cesaro: return "cesaro";
    case LimitMode::failed: return "failed";
  }
  return "unknown";
}

LimitResult limiting_distribution(const TransitionMatrix& m, const ProbabilityVector& p0, double tol,
                                  std::size_t max_iter) {
  check_dims(m, p0.size());
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const std::size_t n = m.size();

  std::vector<double> p = p0.values();
  std::vector<double> running(n, 0.0);
  // last n + 2 iterates; an oscillation has period at most n
  std::deque<std::vector<double>> history;

  for (std::size_t it = 1; it <= max_iter; ++it) {
    auto next = transition_step(m, p);
    if (l1_distance(next, p) < tol) return {ProbabilityVector(std::move(next)), LimitMode::converged, it};

    for (std::size_t k = 0; k < n; ++k) running[k] += (next[k] - running[k]) / static_cast<double>(it);
    history.push_back(next);
    if (history.size() > n + 2) history.pop_front();

    const std::size_t last = history.size() - 1;
    for (std::size_t d = 2; d < last; ++d) {
      if (l1_distance(history[last], history[last - d]) >= tol) continue;
      // a damped oscillation still converges; only a non-decaying orbit counts
      const double step = l1_distance(history[last], history[last - 1]);
      const double earlier = l1_distance(history[last - d], history[last - d - 1]);
      if (step < (1.0 - 1e-6) * earlier) break;
      std::vector<double> mean(n, 0.0);
      for (std::size_t back = 0; back < d; ++back) {
        for (std::size_t k = 0; k < n; ++k) mean[k] += history[last - back][k];
      }
      for (auto& x : mean) x /= static_cast<double>(d);
      if (is_fixed_point(m, mean, tol)) return {ProbabilityVector(std::move(mean)), LimitMode::cesaro, it};
      break;
    }
    p = std::move(next);
  }
  if (max_iter > 0 && is_fixed_point(m, running, tol)) {
    return {ProbabilityVector(std::move(running)), LimitMode::cesaro, max_iter};
  }
  return {ProbabilityVector(std::move(p)), LimitMode::failed, max_iter};
}

std::vector<std::size_t> rank_order(const ProbabilityVector& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<long long> key(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) key[i] = std::llround(p[i] * 1e10);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  return order;
}

RankingResult semiclassical_rank(const TransitionMatrix& g, WalkClass walk_class, int t_q_max,
                                 const RankOptions& options) {
  const auto family = build_family(g, walk_class, t_q_max);
  const std::size_t n = g.size();
  const auto p0 = options.initial.value_or(ProbabilityVector::uniform(n));
  check_dims(g, p0.size());

  const auto count = static_cast<std::size_t>(t_q_max);
  std::vector<std::optional<LimitResult>> limits(count);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(count); ++k) {
    try {
      limits[static_cast<std::size_t>(k)] =
          limiting_distribution(family.at(static_cast<int>(k) + 1), p0, options.tol, options.max_iter);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  RankingResult result;
  result.walk_class = walk_class;
  std::vector<double> avg(n, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    if (limits[k]->mode == LimitMode::failed) throw RankFailed(static_cast<int>(k) + 1);
    const auto& dist = limits[k]->distribution;
    for (std::size_t i = 0; i < n; ++i) avg[i] += (dist[i] - avg[i]) / static_cast<double>(k + 1);
    result.running_average.push_back(avg);
    result.limits.push_back(std::move(*limits[k]));
  }
  result.final_average = avg;
  result.ordering = rank_order(ProbabilityVector(avg));
  return result;
}

double max_running_increment(const RankingResult& r, int burn_in) {
  double worst = 0.0;
  const auto start = static_cast<std::size_t>(std::max(burn_in, 1));
  for (std::size_t k = start; k < r.running_average.size(); ++k) {
    for (std::size_t i = 0; i < r.running_average[k].size(); ++i) {
      worst = std::max(worst, std::abs(r.running_average[k][i] - r.running_average[k - 1][i]));
    }
  }
  return worst;
}

Trajectory sample_trajectory(const TransitionMatrix& m, std::size_t x0, std::size_t steps, std::uint64_t seed,
                             int t_q, WalkClass walk_class) {
  const std::size_t n = m.size();
  if (x0 >= n) throw IndexOutOfRange(x0, n);
  WalkRng rng(seed);
  Trajectory tr{seed, t_q, walk_class, {}};
  tr.nodes.reserve(steps + 1);
  tr.nodes.push_back(x0);
  std::size_t x = x0;
  for (std::size_t t = 0; t < steps; ++t) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t chosen = n;
    std::size_t last_positive = 0;
    for (std::size_t to = 0; to < n; ++to) {
      const double w = m(to, x);
      if (w <= 0.0) continue;
      last_positive = to;
      cumulative += w;
      if (u < cumulative) {
        chosen = to;
        break;
      }
    }
    // rounding can leave the column total a hair below u
    x = chosen == n ? last_positive : chosen;
    tr.nodes.push_back(x);
  }
  return tr;
}

std::vector<Trajectory> sample_batch(const TransitionMatrix& m, std::size_t x0, std::size_t steps,
                                     std::size_t count, std::uint64_t seed, int t_q, WalkClass walk_class) {
  if (x0 >= m.size()) throw IndexOutOfRange(x0, m.size());
  std::vector<Trajectory> batch(count);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(count); ++k) {
    const auto index = static_cast<std::size_t>(k);
    batch[index] = sample_trajectory(m, x0, steps, WalkRng::derive(seed, index), t_q, walk_class);
  }
  return batch;
}

double asymmetry(const TransitionMatrix& m) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) worst = std::max(worst, std::abs(m(a, b) - m(b, a)));
  }
  return worst;
}

}  // namespace sqw
