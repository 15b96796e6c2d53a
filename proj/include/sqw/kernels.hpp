#pragma once

// Inner loops of the walk. Every kernel exists twice: the default namespace
// runs OpenMP-parallel loops, `sqw::kernels::serial` is the plain reference
// kept for tests and the benchmark. Both produce bit-identical results because
// parallelism only splits independent outputs.
//
// Layout conventions shared by all kernels:
//   * edge-space amplitudes use index (i, j) -> i * n + j for |i>_1 |j>_2;
//   * `proxy` holds sqrt(G_ki) at proxy[i * n + k], i.e. the amplitudes of
//     |psi_i> laid out exactly as the edge-space state;
//   * a batch of states is `count` contiguous blocks of n * n amplitudes;
//   * transition matrices are row-major with entry (to, from) at to * n + from.

#include <complex>
#include <cstddef>
#include <span>

namespace sqw::kernels {

using Complex = std::complex<double>;

enum class Marginal { first_register, second_register };

/// out = (2 Pi - 1) in.
void reflect(std::span<const double> proxy, std::size_t n, std::span<const Complex> in, std::span<Complex> out);

/// out = S (2 Pi - 1) in. `in` and `out` must not alias.
void walk_step(std::span<const double> proxy, std::size_t n, std::span<const Complex> in,
               std::span<Complex> out);

/// Applies `steps` walk steps to every state of the batch in place.
void walk_batch(std::span<const double> proxy, std::size_t n, std::span<Complex> states, std::size_t steps);

/// Column i of the output (row-major n x n) is the register marginal of state i
/// of the batch. The batch must hold exactly n states.
void marginal_columns(std::size_t n, std::span<const Complex> states, Marginal which, std::span<double> out);

/// out = m * p for a row-major n x n matrix.
void matvec(std::span<const double> m, std::size_t n, std::span<const double> p, std::span<double> out);

namespace serial {

void reflect(std::span<const double> proxy, std::size_t n, std::span<const Complex> in, std::span<Complex> out);
void walk_step(std::span<const double> proxy, std::size_t n, std::span<const Complex> in,
               std::span<Complex> out);
void walk_batch(std::span<const double> proxy, std::size_t n, std::span<Complex> states, std::size_t steps);
void marginal_columns(std::size_t n, std::span<const Complex> states, Marginal which, std::span<double> out);
void matvec(std::span<const double> m, std::size_t n, std::span<const double> p, std::span<double> out);

}  // namespace serial

}  // namespace sqw::kernels
