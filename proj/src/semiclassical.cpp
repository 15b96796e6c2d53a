#include "sqw/semiclassical.hpp"

#include <algorithm>

#include <json.hpp>

#include "sqw/errors.hpp"
#include "sqw/graph_io.hpp"
#include "sqw/kernels.hpp"

namespace sqw {

namespace {

kernels::Marginal marginal_for(WalkClass c) {
  return c == WalkClass::I ? kernels::Marginal::first_register : kernels::Marginal::second_register;
}

// The N proxy states stacked as one batch.
std::vector<Complex> proxy_batch(const SzegedyOperator& op) {
  const std::size_t n = op.nodes();
  const auto proxy = op.proxy_amplitudes();
  std::vector<Complex> batch(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) batch[i * n * n + i * n + k] = proxy[i * n + k];
  }
  return batch;
}

TransitionMatrix marginals(std::size_t n, std::span<const Complex> batch, WalkClass c) {
  std::vector<double> entries(n * n);
  kernels::marginal_columns(n, batch, marginal_for(c), entries);
  return TransitionMatrix(n, std::move(entries));
}

void check_t_q(int t_q) {
  if (t_q < 1) throw InvalidArgument("quantum time must be >= 1");
}

}  // namespace

WalkClass parse_walk_class(int tag) {
  if (tag == 1) return WalkClass::I;
  if (tag == 2) return WalkClass::II;
  throw InvalidArgument("walk class must be 1 or 2");
}

Register measured_register(WalkClass c) noexcept {
  return c == WalkClass::I ? Register::first : Register::second;
}

SemiclassicalFamily::SemiclassicalFamily(TransitionMatrix source, WalkClass walk_class,
                                         std::vector<FamilyMember> members)
    : source_(std::move(source)), class_(walk_class), members_(std::move(members)) {
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k].t_q != static_cast<int>(k) + 1) throw InvalidArgument("family t_q must run 1, 2, ...");
    if (members_[k].matrix.size() != source_.size()) {
      throw DimensionMismatch(source_.size(), members_[k].matrix.size());
    }
  }
}

const TransitionMatrix& SemiclassicalFamily::at(int t_q) const {
  if (t_q < 1 || t_q > t_q_max()) throw IndexOutOfRange(static_cast<std::size_t>(t_q < 0 ? 0 : t_q), members_.size() + 1);
  return members_[static_cast<std::size_t>(t_q - 1)].matrix;
}

TransitionMatrix semiclassical_matrix(const TransitionMatrix& g, int t_q, WalkClass walk_class) {
  check_t_q(t_q);
  const SzegedyOperator op(g);
  auto batch = proxy_batch(op);
  kernels::walk_batch(op.proxy_amplitudes(), g.size(), batch, static_cast<std::size_t>(t_q));
  return marginals(g.size(), batch, walk_class);
}

SemiclassicalFamily build_family(const TransitionMatrix& g, WalkClass walk_class, int t_q_max) {
  check_t_q(t_q_max);
  const SzegedyOperator op(g);
  auto batch = proxy_batch(op);
  std::vector<FamilyMember> members;
  members.reserve(static_cast<std::size_t>(t_q_max));
  for (int t_q = 1; t_q <= t_q_max; ++t_q) {
    kernels::walk_batch(op.proxy_amplitudes(), g.size(), batch, 1);
    members.push_back({t_q, marginals(g.size(), batch, walk_class)});
  }
  return SemiclassicalFamily(g, walk_class, std::move(members));
}

std::optional<int> family_period(const SemiclassicalFamily& family, double tol) {
  const int range = family.t_q_max();
  if (range < 2) throw InsufficientRange(range);
  for (int p = 1; 2 * p <= range; ++p) {
    bool periodic = true;
    for (int t = 1; periodic && t + p <= range; ++t) {
      periodic = family.at(t).max_abs_diff(family.at(t + p)) <= tol;
    }
    if (periodic) return p;
  }
  return std::nullopt;
}

int distinct_matrices(const SemiclassicalFamily& family, double tol) {
  int window = family.t_q_max();
  if (window >= 2) {
    if (const auto p = family_period(family, tol)) window = *p;
  }
  std::vector<const TransitionMatrix*> classes;
  for (int t = 1; t <= window; ++t) {
    const auto& m = family.at(t);
    bool known = false;
    for (const auto* rep : classes) {
      if (rep->max_abs_diff(m) <= tol) {
        known = true;
        break;
      }
    }
    if (!known) classes.push_back(&m);
  }
  return static_cast<int>(classes.size());
}

std::optional<int> unitary_period(const TransitionMatrix& g, int t_max, double tol, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  const SzegedyOperator op(g);
  const std::size_t dim = n * n;
  std::vector<Complex> columns(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) columns[c * dim + c] = 1.0;
  for (int p = 1; p <= t_max; ++p) {
    kernels::walk_batch(op.proxy_amplitudes(), n, columns, 1);
    double worst = 0.0;
    for (std::size_t c = 0; c < dim && worst <= tol; ++c) {
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex expected = r == c ? Complex{1.0, 0.0} : Complex{};
        worst = std::max(worst, std::abs(columns[c * dim + r] - expected));
      }
    }
    if (worst <= tol) return p;
  }
  return std::nullopt;
}

std::vector<EquivalenceRow> equivalence_table(const TransitionMatrix& g, WalkClass walk_class, int t_q_max,
                                              double tol, std::size_t cap) {
  check_t_q(t_q_max);
  const std::size_t n = g.size();
  if (n > cap) throw TooLarge(n, cap);
  const SzegedyOperator op(g);
  const auto family = build_family(g, walk_class, t_q_max);

  std::vector<TransitionMatrix> matrices{TransitionMatrix::identity(n)};
  std::vector<ComplexMatrix> powers{ComplexMatrix::identity(n * n)};
  const auto u = walk_operator_dense(op, cap);
  for (int t = 1; t <= t_q_max; ++t) {
    matrices.push_back(family.at(t));
    powers.push_back(powers.back() * u);
  }

  std::vector<EquivalenceRow> rows;
  for (int t = 0; t <= t_q_max; ++t) {
    EquivalenceRow row{t, t, t};
    const auto k = static_cast<std::size_t>(t);
    for (std::size_t prev = 0; prev < k; ++prev) {
      if (matrices[prev].max_abs_diff(matrices[k]) <= tol) {
        row.matrix_equivalent = static_cast<int>(prev);
        break;
      }
    }
    for (std::size_t prev = 0; prev < k; ++prev) {
      if (powers[prev].max_abs_diff(powers[k]) <= tol) {
        row.unitary_equivalent = static_cast<int>(prev);
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string family_to_json(const SemiclassicalFamily& family) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& member : family.members()) {
    doc.push_back({{"t_q", member.t_q}, {"matrix", to_csv(member.matrix)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace sqw
