#pragma once

#include <cstddef>
#include <vector>

#include "sqw/graph.hpp"

namespace sqw {

/// Closed-form expectations for the semiclassical family of an n-cycle.
struct CyclePrediction {
  std::size_t n = 0;
  int distinct_count = 0;  // floor(n / 2) + 1
  int family_period = 0;   // n
  int unitary_period = 0;  // n for even n, 2n for odd n
};

/// Unbiased walk on the n-cycle: 1/2 to each neighbour. Throws TooSmall for n < 3.
TransitionMatrix cycle_graph(std::size_t n);

/// Class I semiclassical matrix of the n-cycle at quantum time t_q: 1/2 on
/// j = i +- t_q (mod n), merged into a single 1 when both land on the same node.
TransitionMatrix cycle_semiclassical(std::size_t n, int t_q);

CyclePrediction cycle_predictions(std::size_t n);

/// Strongly connected components of the support digraph (edge from -> to when
/// the entry exceeds `threshold`). Each component is sorted, and components are
/// ordered by their smallest node.
std::vector<std::vector<std::size_t>> components(const TransitionMatrix& m, double threshold = kMatrixTolerance);

}  // namespace sqw
