#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqw/graph.hpp"
#include "sqw/semiclassical.hpp"

namespace sqw {

inline constexpr double kLimitTolerance = 1e-8;
inline constexpr std::size_t kLimitMaxIterations = 100000;

/// m^t p0 by t repeated products. Throws DimensionMismatch.
ProbabilityVector evolve(const TransitionMatrix& m, const ProbabilityVector& p0, std::size_t t);

/// p(0), p(1), ..., p(t).
std::vector<ProbabilityVector> evolve_series(const TransitionMatrix& m, const ProbabilityVector& p0, std::size_t t);

enum class LimitMode { converged, cesaro, failed };

const char* to_string(LimitMode mode) noexcept;

struct LimitResult {
  ProbabilityVector distribution;
  LimitMode mode;
  std::size_t iterations;
};

/// Iterates p <- m p until the L1 change drops below tol (converged). A chain
/// that keeps oscillating is summarized by its Cesaro average: once the
/// iterates repeat with some period d in [2, n] the mean over the last d
/// iterates is returned if it is itself a fixed point within tol. At
/// max_iter the running average of all iterates gets the same test. Otherwise
/// the last iterate is returned with mode failed.
LimitResult limiting_distribution(const TransitionMatrix& m, const ProbabilityVector& p0,
                                  double tol = kLimitTolerance, std::size_t max_iter = kLimitMaxIterations);

/// Node indices by descending probability; probabilities equal to ten decimal
/// places tie and are ordered by ascending index.
std::vector<std::size_t> rank_order(const ProbabilityVector& p);

struct RankOptions {
  double tol = kLimitTolerance;
  std::size_t max_iter = kLimitMaxIterations;
  std::optional<ProbabilityVector> initial;  // uniform when empty
};

struct RankingResult {
  WalkClass walk_class = WalkClass::I;
  std::vector<LimitResult> limits;                   // index t_q - 1
  std::vector<std::vector<double>> running_average;  // mean of limits 1..t_q
  std::vector<double> final_average;
  std::vector<std::size_t> ordering;
};

/// Averages the limiting distributions of family members 1..t_q_max.
/// Throws RankFailed if any member fails to reach a limit.
RankingResult semiclassical_rank(const TransitionMatrix& g, WalkClass walk_class, int t_q_max,
                                 const RankOptions& options = {});

/// Largest increment of the running average over quantum times after `burn_in`.
double max_running_increment(const RankingResult& r, int burn_in);

struct Trajectory {
  std::uint64_t seed = 0;
  int t_q = 1;
  WalkClass walk_class = WalkClass::I;
  std::vector<std::size_t> nodes;  // x_0 .. x_steps
};

/// Samples x_{t+1} from column x_t by inverse CDF on a WalkRng seeded with
/// `seed`. The t_q / class tags are carried as provenance only.
Trajectory sample_trajectory(const TransitionMatrix& m, std::size_t x0, std::size_t steps, std::uint64_t seed,
                             int t_q = 1, WalkClass walk_class = WalkClass::I);

/// `count` trajectories; trajectory k uses WalkRng::derive(seed, k), so the
/// batch is the same whatever the thread schedule.
std::vector<Trajectory> sample_batch(const TransitionMatrix& m, std::size_t x0, std::size_t steps,
                                     std::size_t count, std::uint64_t seed, int t_q = 1,
                                     WalkClass walk_class = WalkClass::I);

/// max |g(j, i) - g(i, j)|.
double asymmetry(const TransitionMatrix& m);

}  // namespace sqw
