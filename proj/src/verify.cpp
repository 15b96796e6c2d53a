#include "sqw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "sqw/cycle.hpp"
#include "sqw/dynamics.hpp"
#include "sqw/random.hpp"
#include "sqw/semiclassical.hpp"
#include "sqw/szegedy.hpp"

namespace sqw {

namespace {

constexpr double kExact = 1e-12;
constexpr double kUnitary = 1e-10;

std::string worst_text(double worst) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "max deviation %.3e", worst);
  return buf;
}

CheckResult bounded(std::string name, double worst, double bound) {
  return {std::move(name), worst < bound, worst_text(worst)};
}

std::vector<TransitionMatrix> stochastic_corpus(int count, std::uint64_t seed) {
  std::vector<TransitionMatrix> out;
  for (int k = 0; k < count; ++k) {
    WalkRng rng(WalkRng::derive(seed, static_cast<std::uint64_t>(k)));
    const auto n = static_cast<std::size_t>(2 + k % 7);
    out.push_back(random_stochastic(n, rng));
  }
  return out;
}

std::vector<TransitionMatrix> symmetric_corpus(int count, std::uint64_t seed) {
  std::vector<TransitionMatrix> out;
  for (int k = 0; k < count; ++k) {
    WalkRng rng(WalkRng::derive(seed, 0x5157'0000ULL + static_cast<std::uint64_t>(k)));
    const auto n = static_cast<std::size_t>(2 + k % 7);
    out.push_back(random_symmetric_stochastic(n, rng));
  }
  return out;
}

std::vector<TransitionMatrix> circulant_corpus(int count, std::uint64_t seed) {
  std::vector<TransitionMatrix> out;
  for (int k = 0; k < count; ++k) {
    WalkRng rng(WalkRng::derive(seed, 0xC1C0'0000ULL + static_cast<std::uint64_t>(k)));
    const auto n = static_cast<std::size_t>(3 + k % 8);
    out.push_back(random_circulant_symmetric(n, rng));
  }
  return out;
}

double max_member_asymmetry(const SemiclassicalFamily& f) {
  double worst = 0.0;
  for (const auto& m : f.members()) worst = std::max(worst, asymmetry(m.matrix));
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const int count = std::max(options.count, 1);
  const auto corpus = stochastic_corpus(count, options.seed);
  const auto symmetric = symmetric_corpus(std::max(count / 2, 1), options.seed);
  const auto circulant = circulant_corpus(std::max(count / 2, 1), options.seed);
  constexpr int kClassRange = 10;

  std::vector<CheckResult> results;

  double th1 = 0.0, th2 = 0.0, th3 = 0.0, stochastic = 0.0;
  double unitary = 0.0, agreement = 0.0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& g = corpus[k];
    const auto one = build_family(g, WalkClass::I, kClassRange);
    const auto two = build_family(g, WalkClass::II, kClassRange + 1);
    th1 = std::max(th1, one.at(1).max_abs_diff(g));
    th2 = std::max(th2, two.at(2).max_abs_diff(g));
    for (int t = 1; t <= kClassRange; ++t) th3 = std::max(th3, one.at(t).max_abs_diff(two.at(t + 1)));
    for (const auto* f : {&one, &two}) {
      for (const auto& m : f->members()) {
        for (std::size_t i = 0; i < m.matrix.size(); ++i) {
          double sum = 0.0;
          for (std::size_t j = 0; j < m.matrix.size(); ++j) sum += m.matrix(j, i);
          stochastic = std::max(stochastic, std::abs(sum - 1.0));
        }
      }
    }

    const SzegedyOperator op(g);
    const auto u = walk_operator_dense(op);
    unitary = std::max(unitary, (u.adjoint() * u).max_deviation_from_identity());

    WalkRng rng(WalkRng::derive(options.seed, 0xA11CE000ULL + k));
    const std::size_t n = g.size();
    std::vector<Complex> amp(n * n);
    double norm = 0.0;
    for (auto& a : amp) {
      a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      norm += std::norm(a);
    }
    for (auto& a : amp) a /= std::sqrt(norm);
    const EdgeState s(n, amp);
    const auto fast = op.apply(s);
    for (std::size_t r = 0; r < n * n; ++r) {
      Complex dense{0.0, 0.0};
      for (std::size_t c = 0; c < n * n; ++c) dense += u(r, c) * amp[c];
      agreement = std::max(agreement, std::abs(dense - fast.amplitudes()[r]));
    }
  }
  results.push_back(bounded("classical limit, class I at t_q=1", th1, kExact));
  results.push_back(bounded("classical limit, class II at t_q=2", th2, kExact));
  results.push_back(bounded("class I at t_q equals class II at t_q+1", th3, kExact));
  results.push_back(bounded("family members column-stochastic", stochastic, kStochasticTolerance));
  results.push_back(bounded("walk operator unitary", unitary, kUnitary));
  results.push_back(bounded("matrix-free step matches dense operator", agreement, kUnitary));

  double th4 = 0.0, th5 = 0.0;
  for (const auto& g : symmetric) {
    const auto uniform = ProbabilityVector::uniform(g.size());
    th4 = std::max(th4, l1_distance(evolve(g, uniform, 1).values(), uniform.values()));
    const SzegedyOperator op(g);
    const auto psi0 = op.uniform_pi_state();
    th5 = std::max(th5, op.apply(psi0).max_abs_diff(psi0));
  }
  results.push_back(bounded("symmetric walk fixes the uniform distribution", th4, kExact));
  results.push_back(bounded("symmetric walk fixes the uniform proxy superposition", th5, kExact));

  double oracle = 0.0;
  std::string prediction_detail = "n=3..12 match";
  bool predictions_ok = true;
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto tq_max = static_cast<int>(2 * n);
    const auto family = build_family(cycle_graph(n), WalkClass::I, tq_max);
    for (int t = 1; t <= tq_max; ++t) oracle = std::max(oracle, family.at(t).max_abs_diff(cycle_semiclassical(n, t)));
    const auto expected = cycle_predictions(n);
    const auto period = family_period(family);
    const auto distinct = distinct_matrices(family);
    const auto u_period = unitary_period(cycle_graph(n), static_cast<int>(2 * n));
    if (period != expected.family_period || distinct != expected.distinct_count ||
        u_period != expected.unitary_period) {
      predictions_ok = false;
      prediction_detail = "mismatch at n=" + std::to_string(n);
      break;
    }
  }
  results.push_back(bounded("cycle closed form matches the general pipeline", oracle, kExact));
  results.push_back({"cycle predictions match measured periods and counts", predictions_ok, prediction_detail});

  double circ = 0.0;
  for (const auto& g : circulant) circ = std::max(circ, max_member_asymmetry(build_family(g, WalkClass::I, 12)));
  results.push_back(bounded("symmetric circulant families stay symmetric", circ, kMatrixTolerance));

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace sqw
