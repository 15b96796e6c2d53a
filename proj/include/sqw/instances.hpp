#pragma once

#include "sqw/graph.hpp"

namespace sqw {

/// Two-node asymmetric walk ((0.1, 0.2), (0.9, 0.8)); stationary (2/11, 9/11).
TransitionMatrix two_node_example();

/// Initial distribution (0.8, 0.2) used with the two-node walk.
ProbabilityVector two_node_initial();

/// 7-node symmetric, inhomogeneous graph: node 3 is a degree-4 hub joined to
/// leaves 0, 1, 2 (each with a self-loop, node 1 most strongly attached) and to
/// the secondary hub 4, which closes a triangle with nodes 5 and 6.
TransitionMatrix star_core_example();

/// 7-node homogeneous, asymmetric circulant: each node moves to i+1, i-1 and
/// i+3 with weights 0.45, 0.25, 0.30.
TransitionMatrix circulant_example();

}  // namespace sqw
