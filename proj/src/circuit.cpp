#include "sqw/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

constexpr std::size_t kWires = 2;
constexpr std::size_t kDim = 4;
constexpr int kMaxSimulatedRounds = 20;

using Mat4 = std::array<Complex, kDim * kDim>;

Mat4 identity4() {
  Mat4 m{};
  for (std::size_t k = 0; k < kDim; ++k) m[k * kDim + k] = 1.0;
  return m;
}

Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t k = 0; k < kDim; ++k) {
      for (std::size_t c = 0; c < kDim; ++c) out[r * kDim + c] += a[r * kDim + k] * b[k * kDim + c];
    }
  }
  return out;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 out{};
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) out[c * kDim + r] = std::conj(a[r * kDim + c]);
  }
  return out;
}

// bit of wire w in basis index b (wire 0 is the high bit)
std::size_t wire_bit(std::size_t b, std::size_t w) { return (b >> (kWires - 1 - w)) & 1U; }
std::size_t flip(std::size_t b, std::size_t w) { return b ^ (std::size_t{1} << (kWires - 1 - w)); }

// Lifts a single-qubit 2x2 matrix on `target`, optionally controlled on `control` == 1.
Mat4 lift(const std::array<Complex, 4>& u, std::size_t target, std::optional<std::size_t> control = {}) {
  Mat4 m{};
  for (std::size_t col = 0; col < kDim; ++col) {
    if (control && wire_bit(col, *control) == 0) {
      m[col * kDim + col] = 1.0;
      continue;
    }
    const std::size_t in = wire_bit(col, target);
    for (std::size_t out = 0; out < 2; ++out) {
      const std::size_t row = out == in ? col : flip(col, target);
      m[row * kDim + col] += u[out * 2 + in];
    }
  }
  return m;
}

std::array<Complex, 4> ry_matrix(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {c, -s, s, c};
}

void check_wire(std::size_t w) {
  if (w >= kWires) throw IndexOutOfRange(w, kWires);
}

Mat4 gate_matrix(const GateOp& op) {
  switch (op.kind) {
    case GateKind::ry: check_wire(op.target); return lift(ry_matrix(op.angle), op.target);
    case GateKind::x: check_wire(op.target); return lift({0.0, 1.0, 1.0, 0.0}, op.target);
    case GateKind::z: check_wire(op.target); return lift({1.0, 0.0, 0.0, -1.0}, op.target);
    case GateKind::cry:
      check_wire(op.target);
      check_wire(op.control);
      return lift(ry_matrix(op.angle), op.target, op.control);
    case GateKind::cz: {
      Mat4 m = identity4();
      m[3 * kDim + 3] = -1.0;
      return m;
    }
    case GateKind::swap: {
      Mat4 m{};
      m[0] = m[1 * kDim + 2] = m[2 * kDim + 1] = m[3 * kDim + 3] = 1.0;
      return m;
    }
    case GateKind::global_phase: {
      Mat4 m{};
      const Complex phase = std::polar(1.0, op.angle);
      for (std::size_t k = 0; k < kDim; ++k) m[k * kDim + k] = phase;
      return m;
    }
    case GateKind::measure:
    case GateKind::reset: break;
  }
  throw InvalidArgument("gate '" + std::string(gate_name(op.kind)) + "' is not unitary");
}

void check_two_nodes(std::size_t n) {
  if (n != 2) throw UnsupportedSize(n);
}

GateOp single(GateKind kind, std::size_t target, double angle = 0.0) {
  GateOp op;
  op.kind = kind;
  op.target = target;
  op.angle = angle;
  return op;
}

GateOp two(GateKind kind, std::size_t control, std::size_t target, double angle = 0.0) {
  GateOp op;
  op.kind = kind;
  op.control = control;
  op.target = target;
  op.angle = angle;
  return op;
}

GateOp measure(std::size_t wire, std::size_t clbit) {
  GateOp op = single(GateKind::measure, wire);
  op.clbit = clbit;
  return op;
}

std::string angle_text(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", a);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::ry: return "ry";
    case GateKind::x: return "x";
    case GateKind::z: return "z";
    case GateKind::cry: return "cry";
    case GateKind::cz: return "cz";
    case GateKind::swap: return "swap";
    case GateKind::measure: return "measure";
    case GateKind::reset: return "reset";
    case GateKind::global_phase: return "global-phase";
  }
  return "unknown";
}

PrepAngles prep_angles(const TransitionMatrix& g, const ProbabilityVector& p0) {
  check_two_nodes(g.size());
  check_two_nodes(p0.size());
  const auto angle = [](double probability) { return 2.0 * std::acos(std::sqrt(std::min(1.0, probability))); };
  return {angle(p0[0]), angle(g(0, 0)), angle(g(0, 1))};
}

std::vector<GateOp> walk_block(const PrepAngles& angles) {
  std::vector<GateOp> gates;
  const std::array<double, 2> theta{angles.theta0, angles.theta1};
  for (std::size_t node = 0; node < 2; ++node) {
    // 1 - 2|psi_i><psi_i| = (1 (x) RY(theta_i)) (1 - 2|i,0><i,0|) (1 (x) RY(-theta_i))
    gates.push_back(single(GateKind::ry, 1, -theta[node]));
    if (node == 0) gates.push_back(single(GateKind::x, 0));
    gates.push_back(single(GateKind::x, 1));
    gates.push_back(two(GateKind::cz, 0, 1));
    gates.push_back(single(GateKind::x, 1));
    if (node == 0) gates.push_back(single(GateKind::x, 0));
    gates.push_back(single(GateKind::ry, 1, theta[node]));
  }
  gates.push_back(two(GateKind::swap, 0, 1));
  gates.push_back(single(GateKind::global_phase, 0, std::numbers::pi));
  return gates;
}

CircuitDescription build_circuit(const TransitionMatrix& g, const ProbabilityVector& p0, int t_q, int t_c,
                                 PrepControl control) {
  check_two_nodes(g.size());
  if (t_q < 1) throw InvalidArgument("quantum time must be >= 1");
  if (t_c < 1) throw InvalidArgument("classical time must be >= 1");
  const auto angles = prep_angles(g, p0);
  const auto block = walk_block(angles);

  std::vector<GateOp> gates;
  if (angles.alpha != 0.0) gates.push_back(single(GateKind::ry, 0, angles.alpha));
  gates.push_back(measure(0, 0));
  for (int step = 1; step <= t_c; ++step) {
    gates.push_back(single(GateKind::reset, 1));
    if (control == PrepControl::quantum) {
      gates.push_back(single(GateKind::x, 0));
      gates.push_back(two(GateKind::cry, 0, 1, angles.theta0));
      gates.push_back(single(GateKind::x, 0));
      gates.push_back(two(GateKind::cry, 0, 1, angles.theta1));
    } else {
      const auto previous = static_cast<std::size_t>(step - 1);
      GateOp prep0 = single(GateKind::ry, 1, angles.theta0);
      prep0.condition = Condition{previous, 0};
      GateOp prep1 = single(GateKind::ry, 1, angles.theta1);
      prep1.condition = Condition{previous, 1};
      gates.push_back(prep0);
      gates.push_back(prep1);
    }
    for (int k = 0; k < t_q; ++k) gates.insert(gates.end(), block.begin(), block.end());
    gates.push_back(measure(0, static_cast<std::size_t>(step)));
  }
  return {std::move(gates), t_q, t_c, g, p0, angles, control};
}

ComplexMatrix compose(std::span<const GateOp> gates) {
  Mat4 total = identity4();
  for (const auto& op : gates) {
    if (op.condition) throw InvalidArgument("conditioned gates have no fixed unitary");
    total = multiply(gate_matrix(op), total);
  }
  ComplexMatrix out(kDim);
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) out(r, c) = total[r * kDim + c];
  }
  return out;
}

double phase_aligned_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  Complex overlap{0.0, 0.0};
  for (std::size_t k = 0; k < a.data().size(); ++k) overlap += std::conj(a.data()[k]) * b.data()[k];
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(phase * a.data()[k] - b.data()[k]));
  }
  return worst;
}

double verify_block(const TransitionMatrix& g, int t_q) {
  check_two_nodes(g.size());
  if (t_q < 1) throw InvalidArgument("quantum time must be >= 1");
  const auto block = walk_block(prep_angles(g, ProbabilityVector::uniform(2)));
  std::vector<GateOp> gates;
  for (int k = 0; k < t_q; ++k) gates.insert(gates.end(), block.begin(), block.end());
  const SzegedyOperator op(g);
  return phase_aligned_deviation(compose(gates), walk_operator_power(op, static_cast<std::size_t>(t_q)));
}

std::vector<double> simulate_bit_marginals(const CircuitDescription& c) {
  if (c.t_c > kMaxSimulatedRounds) throw InvalidArgument("too many classical rounds to simulate exactly");
  const std::size_t bits = static_cast<std::size_t>(c.t_c) + 1;

  // measurement record -> unnormalized density matrix
  std::map<std::uint64_t, Mat4> branches;
  Mat4 start{};
  start[0] = 1.0;
  branches.emplace(0, start);

  for (const auto& op : c.gates) {
    if (op.kind == GateKind::measure) {
      check_wire(op.target);
      std::map<std::uint64_t, Mat4> next;
      for (const auto& [record, rho] : branches) {
        for (std::size_t outcome = 0; outcome < 2; ++outcome) {
          Mat4 projected{};
          double weight = 0.0;
          for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t col = 0; col < kDim; ++col) {
              if (wire_bit(r, op.target) != outcome || wire_bit(col, op.target) != outcome) continue;
              projected[r * kDim + col] = rho[r * kDim + col];
            }
            weight += projected[r * kDim + r].real();
          }
          if (weight <= 0.0) continue;
          std::uint64_t key = record & ~(std::uint64_t{1} << op.clbit);
          key |= static_cast<std::uint64_t>(outcome) << op.clbit;
          auto [it, inserted] = next.emplace(key, projected);
          if (!inserted) {
            for (std::size_t k = 0; k < kDim * kDim; ++k) it->second[k] += projected[k];
          }
        }
      }
      branches = std::move(next);
      continue;
    }
    if (op.kind == GateKind::reset) {
      check_wire(op.target);
      for (auto& [record, rho] : branches) {
        // Kraus operators |0><0| and |0><1| on the target wire
        Mat4 out{};
        for (std::size_t r = 0; r < kDim; ++r) {
          for (std::size_t col = 0; col < kDim; ++col) {
            if (wire_bit(r, op.target) != wire_bit(col, op.target)) continue;
            const std::size_t r0 = wire_bit(r, op.target) ? flip(r, op.target) : r;
            const std::size_t c0 = wire_bit(col, op.target) ? flip(col, op.target) : col;
            out[r0 * kDim + c0] += rho[r * kDim + col];
          }
        }
        rho = out;
      }
      continue;
    }
    const Mat4 u = gate_matrix(op);
    const Mat4 u_dag = adjoint(u);
    for (auto& [record, rho] : branches) {
      if (op.condition && static_cast<int>((record >> op.condition->clbit) & 1U) != op.condition->value) continue;
      rho = multiply(multiply(u, rho), u_dag);
    }
  }

  std::vector<double> ones(bits, 0.0);
  for (const auto& [record, rho] : branches) {
    double weight = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) weight += rho[k * kDim + k].real();
    for (std::size_t b = 0; b < bits; ++b) {
      if ((record >> b) & 1U) ones[b] += weight;
    }
  }
  return ones;
}

std::string export_openqasm(const CircuitDescription& c) {
  const bool classical = c.control == PrepControl::classical;
  const std::size_t bits = static_cast<std::size_t>(c.t_c) + 1;
  const auto creg = [&](std::size_t bit) {
    return classical ? "c" + std::to_string(bit) + "[0]" : "c[" + std::to_string(bit) + "]";
  };
  const auto q = [](std::size_t w) { return "q[" + std::to_string(w) + "]"; };

  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[2];\n";
  if (classical) {
    for (std::size_t b = 0; b < bits; ++b) os << "creg c" << b << "[1];\n";
  } else {
    os << "creg c[" << bits << "];\n";
  }
  for (const auto& op : c.gates) {
    if (op.condition) os << "if(c" << op.condition->clbit << "==" << op.condition->value << ") ";
    switch (op.kind) {
      case GateKind::ry: os << "ry(" << angle_text(op.angle) << ") " << q(op.target) << ";\n"; break;
      case GateKind::x: os << "x " << q(op.target) << ";\n"; break;
      case GateKind::z: os << "z " << q(op.target) << ";\n"; break;
      case GateKind::cry:
        os << "cu3(" << angle_text(op.angle) << ",0,0) " << q(op.control) << "," << q(op.target) << ";\n";
        break;
      case GateKind::cz: os << "cz " << q(op.control) << "," << q(op.target) << ";\n"; break;
      case GateKind::swap:
        os << "cx " << q(op.control) << "," << q(op.target) << ";\n";
        os << "cx " << q(op.target) << "," << q(op.control) << ";\n";
        os << "cx " << q(op.control) << "," << q(op.target) << ";\n";
        break;
      case GateKind::measure: os << "measure " << q(op.target) << " -> " << creg(op.clbit) << ";\n"; break;
      case GateKind::reset: os << "reset " << q(op.target) << ";\n"; break;
      case GateKind::global_phase: os << "// global-phase " << angle_text(op.angle) << "\n"; break;
    }
  }
  return os.str();
}

namespace {

struct QasmLine {
  std::size_t number;
  std::string text;
};

[[noreturn]] void qasm_error(const QasmLine& line, const std::string& what) {
  throw ParseError(line.number, 1, what + ": '" + line.text + "'");
}

double read_angle(const QasmLine& line, std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) qasm_error(line, "bad angle");
  return value;
}

std::size_t read_index(const QasmLine& line, std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) qasm_error(line, "bad index");
  return value;
}

// "q[1]" -> 1
std::size_t read_qubit(const QasmLine& line, std::string_view token) {
  if (token.size() < 4 || token.substr(0, 2) != "q[" || token.back() != ']') qasm_error(line, "bad qubit");
  return read_index(line, token.substr(2, token.size() - 3));
}

// "c[3]" or "c3[0]" -> 3
std::size_t read_clbit(const QasmLine& line, std::string_view token) {
  if (token.size() < 4 || token.front() != 'c' || token.back() != ']') qasm_error(line, "bad classical bit");
  const auto open = token.find('[');
  if (open == 1) return read_index(line, token.substr(2, token.size() - 3));
  if (token.substr(open) != "[0]") qasm_error(line, "bad classical bit");
  return read_index(line, token.substr(1, open - 1));
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == ';')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<GateOp> parse_openqasm(std::string_view text) {
  std::vector<QasmLine> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const auto s = strip(raw);
    if (s.empty()) continue;
    lines.push_back({number, std::string(s)});
  }

  std::vector<GateOp> gates;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& line = lines[k];
    std::string_view s = line.text;
    if (s.starts_with("OPENQASM") || s.starts_with("include") || s.starts_with("qreg") ||
        s.starts_with("creg")) {
      continue;
    }
    if (s.starts_with("// global-phase ")) {
      gates.push_back(single(GateKind::global_phase, 0, read_angle(line, s.substr(16))));
      continue;
    }
    if (s.starts_with("//")) continue;

    std::optional<Condition> condition;
    if (s.starts_with("if(")) {
      const auto eq = s.find("==");
      const auto close = s.find(')');
      if (eq == std::string_view::npos || close == std::string_view::npos || eq < 4) qasm_error(line, "bad condition");
      const auto bit = read_index(line, s.substr(4, eq - 4));
      const auto value = read_index(line, s.substr(eq + 2, close - eq - 2));
      condition = Condition{bit, static_cast<int>(value)};
      s = strip(s.substr(close + 1));
    }

    const auto space = s.find(' ');
    if (space == std::string_view::npos) qasm_error(line, "unrecognized statement");
    const auto head = s.substr(0, space);
    const auto args = strip(s.substr(space + 1));
    const auto comma = args.find(',');
    GateOp op;
    if (head.starts_with("ry(")) {
      op = single(GateKind::ry, read_qubit(line, args), read_angle(line, head.substr(3, head.size() - 4)));
    } else if (head == "x" || head == "z") {
      op = single(head == "x" ? GateKind::x : GateKind::z, read_qubit(line, args));
    } else if (head.starts_with("cu3(") && head.ends_with(",0,0)")) {
      if (comma == std::string_view::npos) qasm_error(line, "cu3 needs two qubits");
      op = two(GateKind::cry, read_qubit(line, args.substr(0, comma)), read_qubit(line, args.substr(comma + 1)),
               read_angle(line, head.substr(4, head.size() - 9)));
    } else if (head == "cz") {
      if (comma == std::string_view::npos) qasm_error(line, "cz needs two qubits");
      op = two(GateKind::cz, read_qubit(line, args.substr(0, comma)), read_qubit(line, args.substr(comma + 1)));
    } else if (head == "cx") {
      // only the three-cx swap pattern is emitted
      if (comma == std::string_view::npos || k + 2 >= lines.size()) qasm_error(line, "unpaired cx");
      const auto a = read_qubit(line, args.substr(0, comma));
      const auto b = read_qubit(line, args.substr(comma + 1));
      const auto expect = [&](const QasmLine& l, std::size_t first, std::size_t second) {
        if (l.text != "cx q[" + std::to_string(first) + "],q[" + std::to_string(second) + "]") {
          qasm_error(l, "unpaired cx");
        }
      };
      expect(lines[k + 1], b, a);
      expect(lines[k + 2], a, b);
      k += 2;
      op = two(GateKind::swap, a, b);
    } else if (head == "measure") {
      const auto arrow = args.find("->");
      if (arrow == std::string_view::npos) qasm_error(line, "measure needs a target bit");
      op = measure(read_qubit(line, strip(args.substr(0, arrow))), read_clbit(line, strip(args.substr(arrow + 2))));
    } else if (head == "reset") {
      op = single(GateKind::reset, read_qubit(line, args));
    } else {
      qasm_error(line, "unsupported gate");
    }
    op.condition = condition;
    gates.push_back(op);
  }
  return gates;
}

bool same_gates(std::span<const GateOp> a, std::span<const GateOp> b, double angle_tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    GateOp x = a[k];
    const GateOp& y = b[k];
    if (std::abs(x.angle - y.angle) > angle_tol) return false;
    x.angle = y.angle;
    if (!(x == y)) return false;
  }
  return true;
}

std::string circuit_to_json(const CircuitDescription& c) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {
      {"t_q", c.t_q},
      {"t_c", c.t_c},
      {"source", {{c.source(0, 0), c.source(0, 1)}, {c.source(1, 0), c.source(1, 1)}}},
      {"p0", c.p0.values()},
      {"alpha", c.angles.alpha},
      {"theta0", c.angles.theta0},
      {"theta1", c.angles.theta1},
      {"prep_control", c.control == PrepControl::quantum ? "quantum" : "classical"},
  };
  auto& gates = doc["gates"] = nlohmann::ordered_json::array();
  for (const auto& op : c.gates) {
    nlohmann::ordered_json g{{"op", gate_name(op.kind)}};
    switch (op.kind) {
      case GateKind::ry:
      case GateKind::x:
      case GateKind::z:
      case GateKind::reset: g["target"] = op.target; break;
      case GateKind::cry:
      case GateKind::cz:
      case GateKind::swap:
        g["control"] = op.control;
        g["target"] = op.target;
        break;
      case GateKind::measure:
        g["target"] = op.target;
        g["clbit"] = op.clbit;
        break;
      case GateKind::global_phase: break;
    }
    if (op.kind == GateKind::ry || op.kind == GateKind::cry || op.kind == GateKind::global_phase) {
      g["angle"] = op.angle;
    }
    if (op.condition) g["condition"] = {{"clbit", op.condition->clbit}, {"value", op.condition->value}};
    gates.push_back(std::move(g));
  }
  return doc.dump(2) + "\n";
}

}  // namespace sqw
