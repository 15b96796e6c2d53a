#include "sqw/szegedy.hpp"

#include <algorithm>
#include <cmath>

#include "sqw/errors.hpp"
#include "sqw/kernels.hpp"

namespace sqw {

namespace {

constexpr double kNormTolerance = 1e-10;

}  // namespace

EdgeState::EdgeState(std::size_t n, std::vector<Complex> amp) : n_(n), amp_(std::move(amp)) {
  if (n_ == 0) throw InvalidArgument("edge state needs at least one node");
  if (amp_.size() != n_ * n_) throw DimensionMismatch(n_ * n_, amp_.size());
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) throw InvalidArgument("edge state is not normalized");
}

EdgeState EdgeState::basis(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n) throw IndexOutOfRange(i, n);
  if (j >= n) throw IndexOutOfRange(j, n);
  std::vector<Complex> amp(n * n);
  amp[index(n, i, j)] = 1.0;
  return EdgeState(n, std::move(amp));
}

double EdgeState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return sum;
}

Complex EdgeState::inner(const EdgeState& other) const {
  if (other.amp_.size() != amp_.size()) throw DimensionMismatch(amp_.size(), other.amp_.size());
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < amp_.size(); ++k) sum += std::conj(amp_[k]) * other.amp_[k];
  return sum;
}

double EdgeState::max_abs_diff(const EdgeState& other) const {
  if (other.amp_.size() != amp_.size()) throw DimensionMismatch(amp_.size(), other.amp_.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < amp_.size(); ++k) worst = std::max(worst, std::abs(amp_[k] - other.amp_[k]));
  return worst;
}

SzegedyOperator::SzegedyOperator(TransitionMatrix g) : g_(std::move(g)) {
  const std::size_t n = g_.size();
  proxy_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) proxy_[i * n + k] = std::sqrt(g_(k, i));
  }
}

EdgeState SzegedyOperator::proxy_state(std::size_t i) const {
  const std::size_t n = nodes();
  if (i >= n) throw IndexOutOfRange(i, n);
  std::vector<Complex> amp(n * n);
  for (std::size_t k = 0; k < n; ++k) amp[i * n + k] = proxy_[i * n + k];
  return EdgeState(n, std::move(amp));
}

EdgeState SzegedyOperator::uniform_pi_state() const {
  const std::size_t n = nodes();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> amp(n * n);
  for (std::size_t k = 0; k < n * n; ++k) amp[k] = scale * proxy_[k];
  return EdgeState(n, std::move(amp));
}

void SzegedyOperator::check_dimension(const EdgeState& s) const {
  if (s.nodes() != nodes()) throw DimensionMismatch(nodes() * nodes(), s.dimension());
}

EdgeState SzegedyOperator::apply(const EdgeState& s, std::size_t steps) const {
  check_dimension(s);
  const std::size_t n = nodes();
  std::vector<Complex> cur(s.amplitudes().begin(), s.amplitudes().end());
  std::vector<Complex> next(n * n);
  for (std::size_t t = 0; t < steps; ++t) {
    kernels::walk_step(proxy_, n, cur, next);
    cur.swap(next);
  }
  return EdgeState(n, std::move(cur));
}

EdgeState SzegedyOperator::reflect(const EdgeState& s) const {
  check_dimension(s);
  const std::size_t n = nodes();
  std::vector<Complex> out(n * n);
  kernels::reflect(proxy_, n, s.amplitudes(), out);
  return EdgeState(n, std::move(out));
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw DimensionMismatch(dim_, rhs.dim_);
  ComplexMatrix out(dim_);
  const auto d = static_cast<long>(dim_);
#pragma omp parallel for schedule(static)
  for (long rr = 0; rr < d; ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex lhs = a_[r * dim_ + k];
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out.a_[r * dim_ + c] += lhs * rhs.a_[k * dim_ + c];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch(dim_, other.dim_);
  double worst = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) worst = std::max(worst, std::abs(a_[k] - other.a_[k]));
  return worst;
}

double ComplexMatrix::max_deviation_from_identity() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex expected = r == c ? Complex{1.0, 0.0} : Complex{};
      worst = std::max(worst, std::abs((*this)(r, c) - expected));
    }
  }
  return worst;
}

ComplexMatrix walk_operator_power(const SzegedyOperator& op, std::size_t power, std::size_t cap) {
  const std::size_t n = op.nodes();
  if (n > cap) throw TooLarge(n, cap);
  const std::size_t dim = n * n;
  // one basis state per column, evolved together
  std::vector<Complex> columns(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) columns[c * dim + c] = 1.0;
  kernels::walk_batch(op.proxy_amplitudes(), n, columns, power);
  ComplexMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = columns[c * dim + r];
  }
  return u;
}

ComplexMatrix walk_operator_dense(const SzegedyOperator& op, std::size_t cap) {
  return walk_operator_power(op, 1, cap);
}

ProbabilityVector register_distribution(const EdgeState& s, Register which) {
  const std::size_t n = s.nodes();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p[which == Register::first ? i : j] += std::norm(s(i, j));
  }
  return ProbabilityVector(std::move(p));
}

}  // namespace sqw
