#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sqw/graph.hpp"

namespace sqw {

using Complex = std::complex<double>;

/// Default node-count cap for materializing the N^2 x N^2 walk operator.
inline constexpr std::size_t kDenseCap = 32;

enum class Register { first = 1, second = 2 };

/// Amplitudes on the edge space C^N (x) C^N. Basis state |i>_1 |j>_2 lives at
/// index i * n + j.
class EdgeState {
 public:
  /// Throws DimensionMismatch when amp.size() != n * n and InvalidArgument when
  /// the squared norm differs from 1 by more than 1e-10.
  EdgeState(std::size_t n, std::vector<Complex> amp);

  static EdgeState basis(std::size_t n, std::size_t i, std::size_t j);

  std::size_t nodes() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amp_.size(); }
  static std::size_t index(std::size_t n, std::size_t i, std::size_t j) noexcept { return i * n + j; }

  const Complex& operator()(std::size_t i, std::size_t j) const { return amp_[i * n_ + j]; }
  std::span<const Complex> amplitudes() const noexcept { return amp_; }

  double norm_squared() const;
  Complex inner(const EdgeState& other) const;  // <this|other>
  double max_abs_diff(const EdgeState& other) const;

 private:
  std::size_t n_;
  std::vector<Complex> amp_;
};

/// U = S (2 Pi - 1) for a column-stochastic matrix, applied matrix-free via
/// inner products against the cached proxy amplitudes sqrt(G_ki). U^2 is the
/// two-reflection operator of the original bipartite formulation; use the
/// step count of `apply` for it.
class SzegedyOperator {
 public:
  explicit SzegedyOperator(TransitionMatrix g);

  const TransitionMatrix& source() const noexcept { return g_; }
  std::size_t nodes() const noexcept { return g_.size(); }

  /// sqrt(G_ki) at index i * n + k, the amplitudes of all proxy states.
  std::span<const double> proxy_amplitudes() const noexcept { return proxy_; }

  /// |psi_i> = |i>_1 (x) sum_k sqrt(G_ki) |k>_2. Throws IndexOutOfRange.
  EdgeState proxy_state(std::size_t i) const;

  /// (1/sqrt(N)) sum_i |psi_i>.
  EdgeState uniform_pi_state() const;

  /// U^steps s. Throws DimensionMismatch.
  EdgeState apply(const EdgeState& s, std::size_t steps = 1) const;

  /// (2 Pi - 1) s, without the swap.
  EdgeState reflect(const EdgeState& s) const;

 private:
  void check_dimension(const EdgeState& s) const;

  TransitionMatrix g_;
  std::vector<double> proxy_;
};

/// Row-major dense complex square matrix.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  std::span<const Complex> data() const noexcept { return a_; }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix adjoint() const;
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_deviation_from_identity() const;

 private:
  std::size_t dim_;
  std::vector<Complex> a_;
};

/// Dense U, column (i, j) = U |i>_1 |j>_2. Throws TooLarge when nodes > cap.
ComplexMatrix walk_operator_dense(const SzegedyOperator& op, std::size_t cap = kDenseCap);

/// U^power built column by column with matrix-free steps (O(N^4) per power
/// instead of a dense O(N^6) product). Throws TooLarge when nodes > cap.
ComplexMatrix walk_operator_power(const SzegedyOperator& op, std::size_t power, std::size_t cap = kDenseCap);

/// Marginal of one register: entry j sums |amp|^2 over the other index.
ProbabilityVector register_distribution(const EdgeState& s, Register which);

}  // namespace sqw
