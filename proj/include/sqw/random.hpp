#pragma once

#include <cstddef>

#include "sqw/graph.hpp"
#include "sqw/rng.hpp"

namespace sqw {

// Seeded generators for the verification corpora.

/// Dense column-stochastic matrix with entries drawn from (0, 1] before
/// normalization.
TransitionMatrix random_stochastic(std::size_t n, WalkRng& rng);

/// Symmetric (hence doubly) stochastic matrix: a random convex combination of
/// symmetrized permutation matrices.
TransitionMatrix random_symmetric_stochastic(std::size_t n, WalkRng& rng);

/// Symmetric circulant stochastic matrix; each offset pair is kept with
/// probability 0.7 (offset 1 always), weights random.
TransitionMatrix random_circulant_symmetric(std::size_t n, WalkRng& rng);

}  // namespace sqw
