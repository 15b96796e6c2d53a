#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sqw {

/// Column sums must be within this of 1.
inline constexpr double kStochasticTolerance = 1e-9;

/// Entrywise tolerance used for symmetry and circulant checks.
inline constexpr double kMatrixTolerance = 1e-9;

/// Dense N x N nonnegative edge weights. Entry (to, from) is the weight of the
/// edge from -> to, so column `from` holds the out-edges of that node.
class WeightedGraph {
 public:
  /// `weights` is row-major: weights[to * n + from]. Throws NegativeWeight.
  WeightedGraph(std::size_t n, std::vector<double> weights);

  static WeightedGraph from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t to, std::size_t from) const { return w_[to * n_ + from]; }
  std::span<const double> data() const noexcept { return w_; }

 private:
  std::size_t n_;
  std::vector<double> w_;
};

/// Column-stochastic transition matrix: entry (to, from) is the probability of
/// jumping from -> to. Immutable once constructed.
class TransitionMatrix {
 public:
  /// Row-major entries. Throws NegativeWeight for entries < 0 or > 1 and
  /// NotStochastic when a column sum misses 1 by more than the tolerance.
  TransitionMatrix(std::size_t n, std::vector<double> entries);

  static TransitionMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static TransitionMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t to, std::size_t from) const { return g_[to * n_ + from]; }
  std::span<const double> data() const noexcept { return g_; }
  std::vector<double> column(std::size_t from) const;

  /// Largest entrywise absolute difference. Throws DimensionMismatch.
  double max_abs_diff(const TransitionMatrix& other) const;

 private:
  std::size_t n_;
  std::vector<double> g_;
};

/// Probability distribution over nodes.
class ProbabilityVector {
 public:
  /// Throws InvalidArgument if any entry is negative or the sum misses 1.
  explicit ProbabilityVector(std::vector<double> p);

  static ProbabilityVector uniform(std::size_t n);
  static ProbabilityVector delta(std::size_t n, std::size_t node);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> data() const noexcept { return p_; }
  const std::vector<double>& values() const noexcept { return p_; }

 private:
  std::vector<double> p_;
};

struct Classification {
  bool symmetric = false;
  bool homogeneous = false;
};

struct FromWeightsOptions {
  /// Replace an all-zero column by the uniform column instead of failing.
  bool patch_dangling = false;
};

/// Normalizes each column of `w` to sum 1.
TransitionMatrix from_weights(const WeightedGraph& w, FromWeightsOptions options = {});

/// Checks column-stochasticity of raw row-major entries; throws NotStochastic
/// or NegativeWeight.
void validate(std::size_t n, std::span<const double> entries);
void validate(const TransitionMatrix& m);

/// Symmetric: G == G^T. Homogeneous: G is circulant under the current labeling,
/// i.e. entry (to, from) depends only on (to - from) mod n.
Classification classify(const TransitionMatrix& m, double tol = kMatrixTolerance);

double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace sqw
