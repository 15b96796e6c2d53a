#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqw/graph.hpp"
#include "sqw/szegedy.hpp"

namespace sqw {

/// Class I measures the first register after the quantum evolution, class II
/// the second. Class I at t_q equals class II at t_q + 1.
enum class WalkClass { I = 1, II = 2 };

WalkClass parse_walk_class(int tag);
Register measured_register(WalkClass c) noexcept;

struct FamilyMember {
  int t_q;
  TransitionMatrix matrix;
};

/// Semiclassical transition matrices for t_q = 1..t_q_max of one source
/// matrix. t_q = 0 (the identity) is never a member.
class SemiclassicalFamily {
 public:
  /// Throws InvalidArgument unless t_q runs 1, 2, ... without gaps.
  SemiclassicalFamily(TransitionMatrix source, WalkClass walk_class, std::vector<FamilyMember> members);

  const TransitionMatrix& source() const noexcept { return source_; }
  WalkClass walk_class() const noexcept { return class_; }
  const std::vector<FamilyMember>& members() const noexcept { return members_; }
  int t_q_max() const noexcept { return static_cast<int>(members_.size()); }

  /// Member at quantum time t_q (1-based). Throws IndexOutOfRange.
  const TransitionMatrix& at(int t_q) const;

 private:
  TransitionMatrix source_;
  WalkClass class_;
  std::vector<FamilyMember> members_;
};

/// Column i is the measured-register distribution of U^t_q |psi_i>.
TransitionMatrix semiclassical_matrix(const TransitionMatrix& g, int t_q, WalkClass walk_class);

/// Members 1..t_q_max, evolving the N proxy states one step per member.
SemiclassicalFamily build_family(const TransitionMatrix& g, WalkClass walk_class, int t_q_max);

/// Smallest p with members(t + p) == members(t) for every witnessed t, where
/// p only qualifies if the family covers two full periods (t_q_max >= 2p).
/// Throws InsufficientRange when t_q_max < 2.
std::optional<int> family_period(const SemiclassicalFamily& family, double tol = kMatrixTolerance);

/// Number of distinct members over one period (whole range if aperiodic).
int distinct_matrices(const SemiclassicalFamily& family, double tol = kMatrixTolerance);

/// Smallest p <= t_max with max |U^p - 1| <= tol. Throws TooLarge beyond cap.
std::optional<int> unitary_period(const TransitionMatrix& g, int t_max, double tol = kMatrixTolerance,
                                  std::size_t cap = kDenseCap);

/// For each t_q in 0..t_q_max, the smallest t' whose semiclassical matrix
/// (resp. unitary power) equals the one at t_q. t_q = 0 is the identity.
struct EquivalenceRow {
  int t_q;
  int matrix_equivalent;
  int unitary_equivalent;
};

std::vector<EquivalenceRow> equivalence_table(const TransitionMatrix& g, WalkClass walk_class, int t_q_max,
                                              double tol = kMatrixTolerance, std::size_t cap = kDenseCap);

/// JSON array of {"t_q": t, "matrix": "<matrix-CSV text>"}.
std::string family_to_json(const SemiclassicalFamily& family);

}  // namespace sqw
