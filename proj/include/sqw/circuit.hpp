#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqw/graph.hpp"
#include "sqw/szegedy.hpp"

namespace sqw {

// Two-qubit circuits for the semiclassical walk on a 2-node graph. Wire 0 is
// the first (position) register, wire 1 the second; the edge-space index of
// |a>_0 |b>_1 is 2a + b, matching EdgeState.

enum class GateKind { ry, x, z, cry, cz, swap, measure, reset, global_phase };

std::string_view gate_name(GateKind kind) noexcept;

/// Gate applies only when classical bit `clbit` holds `value`.
struct Condition {
  std::size_t clbit = 0;
  int value = 0;

  bool operator==(const Condition&) const = default;
};

struct GateOp {
  GateKind kind = GateKind::x;
  double angle = 0.0;       // ry, cry, global_phase (radians)
  std::size_t target = 0;   // acted-on wire; for swap/cz the second wire
  std::size_t control = 0;  // cry, cz, swap: first wire
  std::size_t clbit = 0;    // measure
  std::optional<Condition> condition;

  bool operator==(const GateOp&) const = default;
};

struct PrepAngles {
  double alpha = 0.0;   // RY angle preparing sqrt(p0[0])|0> + sqrt(p0[1])|1>
  double theta0 = 0.0;  // RY angle preparing the coin of |psi_0>
  double theta1 = 0.0;  // RY angle preparing the coin of |psi_1>
};

/// theta_i = 2 acos(sqrt(g(0, i))), alpha = 2 acos(sqrt(p0[0])). Throws
/// UnsupportedSize unless both inputs are 2-dimensional.
PrepAngles prep_angles(const TransitionMatrix& g, const ProbabilityVector& p0);

enum class PrepControl {
  quantum,    // controlled-RY keyed on wire 0
  classical,  // RY conditioned on the last measured bit; not exercised on hardware
};

struct CircuitDescription {
  std::vector<GateOp> gates;
  int t_q = 1;
  int t_c = 1;
  TransitionMatrix source;
  ProbabilityVector p0;
  PrepAngles angles;
  PrepControl control = PrepControl::quantum;
};

/// One application of U = -S (1 - 2|psi_1><psi_1|)(1 - 2|psi_0><psi_0|), each
/// reflection as RY(-theta_i)-conjugated controlled(-Z), then the swap and a
/// global phase of pi.
std::vector<GateOp> walk_block(const PrepAngles& angles);

/// Initial RY(alpha) (omitted when alpha == 0) and measurement into bit 0,
/// then t_c rounds of [reset wire 1, proxy prep, t_q walk blocks, measure wire
/// 0 into bit k]. Throws UnsupportedSize for N != 2, InvalidArgument for
/// t_q < 1 or t_c < 1.
CircuitDescription build_circuit(const TransitionMatrix& g, const ProbabilityVector& p0, int t_q, int t_c,
                                 PrepControl control = PrepControl::quantum);

/// 4x4 product of unitary gates in list order. Throws InvalidArgument on
/// measure, reset or conditioned gates.
ComplexMatrix compose(std::span<const GateOp> gates);

/// max |e^{i phi} a - b| for the phase phi that best aligns a with b.
double phase_aligned_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

/// Compares t_q composed walk blocks against the dense U^t_q.
double verify_block(const TransitionMatrix& g, int t_q);

/// Exact probability that each classical bit reads 1, from a density-matrix
/// simulation that branches on every measurement record.
std::vector<double> simulate_bit_marginals(const CircuitDescription& c);

/// OpenQASM 2.0 text. Controlled-RY is lowered to cu3(theta,0,0), swap to
/// three cx, the global phase to a `// global-phase` comment. Angles carry 12
/// significant digits.
std::string export_openqasm(const CircuitDescription& c);

/// Reads back the gate list written by export_openqasm.
std::vector<GateOp> parse_openqasm(std::string_view text);

/// Same gates, wires, bits and conditions; angles equal within `angle_tol`.
bool same_gates(std::span<const GateOp> a, std::span<const GateOp> b, double angle_tol);

std::string circuit_to_json(const CircuitDescription& c);

}  // namespace sqw
