// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../support/dense_oracle.hpp"
#include "sqw/circuit.hpp"
#include "sqw/cycle.hpp"
#include "sqw/dynamics.hpp"
#include "sqw/instances.hpp"
#include "sqw/random.hpp"
#include "sqw/semiclassical.hpp"
#include "sqw/szegedy.hpp"

using namespace sqw;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<TransitionMatrix> stochastic_corpus() {
  std::vector<TransitionMatrix> out;
  for (std::uint64_t k = 0; k < 100; ++k) {
    WalkRng rng(WalkRng::derive(2024, k));
    out.push_back(random_stochastic(2 + k % 7, rng));
  }
  return out;
}

std::vector<TransitionMatrix> symmetric_corpus() {
  std::vector<TransitionMatrix> out;
  for (std::uint64_t k = 0; k < 50; ++k) {
    WalkRng rng(WalkRng::derive(4048, k));
    out.push_back(random_symmetric_stochastic(2 + k % 7, rng));
  }
  return out;
}

double round_sig(double x, int digits) {
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
  return std::round(x * scale) / scale;
}

Outcome theorems() {
  const auto start = std::chrono::steady_clock::now();
  double th1 = 0.0, th2 = 0.0, th3 = 0.0;
  for (const auto& g : stochastic_corpus()) {
    const auto one = build_family(g, WalkClass::I, 10);
    const auto two = build_family(g, WalkClass::II, 11);
    th1 = std::max(th1, one.at(1).max_abs_diff(g));
    th2 = std::max(th2, two.at(2).max_abs_diff(g));
    for (int t = 1; t <= 10; ++t) th3 = std::max(th3, one.at(t).max_abs_diff(two.at(t + 1)));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = th1 < 1e-12 && th2 < 1e-12 && th3 < 1e-12 && seconds < 30.0;
  return {ok, "I(1)-G " + fmt("%.2e", th1) + ", II(2)-G " + fmt("%.2e", th2) + ", I(t)-II(t+1) " + fmt("%.2e", th3) +
                  ", " + fmt("%.3f", seconds) + " s"};
}

Outcome unitarity() {
  double unitary = 0.0, agreement = 0.0;
  std::uint64_t k = 0;
  for (const auto& g : stochastic_corpus()) {
    const std::size_t n = g.size();
    const SzegedyOperator op(g);
    const auto u = walk_operator_dense(op);
    unitary = std::max(unitary, (u.adjoint() * u).max_deviation_from_identity());

    // matrix-free step against the product with the explicitly assembled S (2 Pi - 1)
    const auto ref = oracle::walk_operator(std::vector<double>(g.data().begin(), g.data().end()), n);
    WalkRng rng(WalkRng::derive(99, k++));
    std::vector<Complex> amp(n * n);
    double norm = 0.0;
    for (auto& a : amp) {
      a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      norm += std::norm(a);
    }
    for (auto& a : amp) a /= std::sqrt(norm);
    const auto fast = op.apply(EdgeState(n, amp));
    const auto dense = oracle::times(ref, amp);
    for (std::size_t q = 0; q < amp.size(); ++q) agreement = std::max(agreement, std::abs(dense[q] - fast.amplitudes()[q]));
  }
  return {unitary < 1e-10 && agreement < 1e-10,
          "|U^dag U - 1| " + fmt("%.2e", unitary) + ", matrix-free vs dense " + fmt("%.2e", agreement)};
}

Outcome cycles() {
  double worst = 0.0;
  std::string mismatch;
  for (std::size_t n = 3; n <= 12; ++n) {
    const int range = static_cast<int>(2 * n);
    const auto family = build_family(cycle_graph(n), WalkClass::I, range);
    for (int t = 1; t <= range; ++t) worst = std::max(worst, family.at(t).max_abs_diff(cycle_semiclassical(n, t)));
    const auto p = cycle_predictions(n);
    const auto period = family_period(family);
    const auto distinct = distinct_matrices(family);
    const auto u = unitary_period(cycle_graph(n), range);
    if (period != p.family_period || distinct != p.distinct_count || u != p.unitary_period) {
      mismatch += " n=" + std::to_string(n);
    }
  }
  const auto p6 = cycle_predictions(6);
  const auto p7 = cycle_predictions(7);
  const bool published = p6.distinct_count == 4 && p6.family_period == 6 && p6.unitary_period == 6 &&
                     p7.distinct_count == 4 && p7.family_period == 7 && p7.unitary_period == 14;
  return {worst < 1e-12 && mismatch.empty() && published,
          "closed form vs pipeline " + fmt("%.2e", worst) + (mismatch.empty() ? ", predictions match" : ", mismatch at" + mismatch) +
              (published ? ", {4,6,6} and {4,7,14}" : ", n=6/7 predictions wrong")};
}

Outcome breaking() {
  using Parts = std::vector<std::vector<std::size_t>>;
  const auto f6 = build_family(cycle_graph(6), WalkClass::I, 6);
  const bool t2 = components(f6.at(2)) == Parts{{0, 2, 4}, {1, 3, 5}};
  const bool t3 = components(f6.at(3)) == Parts{{0, 3}, {1, 4}, {2, 5}};
  const bool t6 = components(f6.at(6)) == Parts{{0}, {1}, {2}, {3}, {4}, {5}};

  // 7-cycle t_q = 2: the support is exactly the undirected chain 0-2-4-6-1-3-5(-0)
  const auto m7 = build_family(cycle_graph(7), WalkClass::I, 2).at(2);
  const std::size_t chain[] = {0, 2, 4, 6, 1, 3, 5};
  std::vector<std::vector<bool>> expected(7, std::vector<bool>(7, false));
  for (std::size_t k = 0; k < 7; ++k) {
    expected[chain[k]][chain[(k + 1) % 7]] = true;
    expected[chain[(k + 1) % 7]][chain[k]] = true;
  }
  bool chain_ok = components(m7).size() == 1;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) chain_ok = chain_ok && ((m7(b, a) > 1e-9) == expected[a][b]);

  return {t2 && t3 && t6 && chain_ok, std::string("6-cycle t_q=2 ") + (t2 ? "ok" : "bad") + ", t_q=3 " + (t3 ? "ok" : "bad") +
                                          ", t_q=6 " + (t6 ? "ok" : "bad") + ", 7-cycle chain " + (chain_ok ? "ok" : "bad")};
}

Outcome symmetric_fixed_points() {
  double th4 = 0.0, th5 = 0.0;
  for (const auto& g : symmetric_corpus()) {
    const auto u = ProbabilityVector::uniform(g.size());
    th4 = std::max(th4, l1_distance(evolve(g, u, 1).values(), u.values()));
    const SzegedyOperator op(g);
    const auto psi = op.uniform_pi_state();
    th5 = std::max(th5, op.apply(psi).max_abs_diff(psi));
  }
  return {th4 < 1e-12 && th5 < 1e-12, "m*uniform " + fmt("%.2e", th4) + ", U Psi0 - Psi0 " + fmt("%.2e", th5)};
}

Outcome two_node() {
  const auto g = two_node_example();
  const auto p0 = two_node_initial();
  const auto family = build_family(g, WalkClass::I, 3);
  const auto series = evolve_series(family.at(1), p0, 2);
  const auto l1 = limiting_distribution(family.at(1), p0);
  const auto l2 = limiting_distribution(family.at(2), p0);
  const auto l3 = limiting_distribution(family.at(3), p0);

  // brute-force targets: dense U^t, explicit marginals, plain power iteration
  const std::vector<double> raw(g.data().begin(), g.data().end());
  const double o2 = oracle::stationary(oracle::semiclassical(raw, 2, 2, 1), 2, p0.values())[1];
  const double o3 = oracle::stationary(oracle::semiclassical(raw, 2, 3, 1), 2, p0.values())[1];

  const bool start = std::abs(series[0][1] - 0.2) < 1e-12 && std::abs(series[1][1] - 0.88) < 1e-12;
  const bool limit1 = std::abs(l1.distribution[1] - 9.0 / 11.0) < 1e-3;
  const bool published = std::abs(l2.distribution[1] - 0.51) <= 0.01 && std::abs(l3.distribution[1] - 0.89) <= 0.01;
  // targets frozen from an external dense numpy computation
  constexpr double kFrozen2 = 0.612 / 1.196;
  constexpr double kFrozen3 = 8.0 / 9.0;
  const bool oracle_ok = std::abs(l2.distribution[1] - o2) < 1e-6 && std::abs(l3.distribution[1] - o3) < 1e-6 &&
                         std::abs(l2.distribution[1] - kFrozen2) < 1e-6 && std::abs(l3.distribution[1] - kFrozen3) < 1e-6;
  return {start && limit1 && published && oracle_ok,
          "series " + fmt("%.4g", series[0][1]) + ", " + fmt("%.4g", series[1][1]) + "; limits " +
              fmt("%.6f", l1.distribution[1]) + ", " + fmt("%.6f", l2.distribution[1]) + " (oracle " + fmt("%.6f", o2) +
              "), " + fmt("%.6f", l3.distribution[1]) + " (oracle " + fmt("%.6f", o3) + ")"};
}

Outcome circuit() {
  const auto g = two_node_example();
  const auto a = prep_angles(g, two_node_initial());
  const bool angles = round_sig(a.theta0, 3) == 2.5 && round_sig(a.theta1, 3) == 2.21 && round_sig(a.alpha, 3) == 0.927;

  double block = 0.0, channel = 0.0;
  for (int t = 1; t <= 3; ++t) {
    block = std::max(block, verify_block(g, t));
    const auto member = semiclassical_matrix(g, t, WalkClass::I);
    for (std::size_t x = 0; x < 2; ++x) {
      // statevector: prep + t blocks from |x, 0>, then projective measurement of wire 0
      const auto c = build_circuit(g, ProbabilityVector::delta(2, x), t, 1);
      std::vector<GateOp> segment;
      bool inside = false;
      for (const auto& op : c.gates) {
        if (op.kind == GateKind::reset) inside = true;
        else if (op.kind == GateKind::measure) inside = false;
        else if (inside) segment.push_back(op);
      }
      const auto u = compose(segment);
      for (std::size_t y = 0; y < 2; ++y) {
        const double p = std::norm(u(2 * y, 2 * x)) + std::norm(u(2 * y + 1, 2 * x));
        channel = std::max(channel, std::abs(p - member(y, x)));
      }
      // density-matrix simulation with mid-circuit collapse and reset
      const auto bits = simulate_bit_marginals(c);
      channel = std::max(channel, std::abs(bits[1] - member(1, x)));
    }
  }
  return {angles && block < 1e-9 && channel < 1e-10,
          "angles " + fmt("%.3g", a.theta0) + "/" + fmt("%.3g", a.theta1) + "/" + fmt("%.3g", a.alpha) + ", block " +
              fmt("%.2e", block) + ", channel " + fmt("%.2e", channel)};
}

std::string trajectory_bytes(const std::vector<Trajectory>& batch) {
  std::string out;
  for (const auto& tr : batch) {
    out += std::to_string(tr.seed) + ":";
    for (auto x : tr.nodes) out += std::to_string(x) + ",";
    out += "\n";
  }
  return out;
}

Outcome sampler() {
  constexpr std::size_t kShots = 20000;
  double worst = 0.0;
  WalkRng rng(808);
  std::vector<TransitionMatrix> cases{two_node_example(), star_core_example(), random_stochastic(5, rng)};
  for (const auto& g : cases) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::vector<double> freq(g.size(), 0.0);
      for (const auto& tr : sample_batch(g, x, 1, kShots, 1000 + x)) freq[tr.nodes[1]] += 1.0 / kShots;
      worst = std::max(worst, l1_distance(freq, g.column(x)));
    }
  }
  const auto g = star_core_example();
  const bool same = trajectory_bytes(sample_batch(g, 0, 100, 64, 77)) == trajectory_bytes(sample_batch(g, 0, 100, 64, 77));
  return {worst < 0.05 && same, "worst empirical L1 " + fmt("%.4f", worst) + (same ? ", reruns identical" : ", reruns differ")};
}

Outcome symmetry_breaking() {
  const auto g = star_core_example();
  const auto family = build_family(g, WalkClass::I, 6);
  const double first = asymmetry(family.at(1));
  double weakest = 1.0;
  for (int t = 2; t <= 6; ++t) weakest = std::min(weakest, asymmetry(family.at(t)));

  constexpr int kRange = 400;
  constexpr int kBurnIn = 200;
  const auto r = semiclassical_rank(g, WalkClass::I, kRange);
  const double increment = max_running_increment(r, kBurnIn);
  double spread = 0.0;
  for (double p : r.final_average) spread = std::max(spread, std::abs(p - 1.0 / 7.0));
  const bool ok = first < 1e-12 && weakest > 1e-6 && r.ordering[0] == 3 && spread > 1e-3 && increment < 1e-3;
  return {ok, "asym(1) " + fmt("%.1e", first) + ", min asym(2..6) " + fmt("%.3f", weakest) + ", top node " +
                  std::to_string(r.ordering[0]) + ", max |avg - 1/7| " + fmt("%.4f", spread) +
                  ", increment after burn-in " + fmt("%.2e", increment)};
}

Outcome circulant_regression() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    WalkRng rng(WalkRng::derive(6060, k));
    const auto g = random_circulant_symmetric(3 + k % 8, rng);
    const auto family = build_family(g, WalkClass::I, 12);
    for (const auto& m : family.members()) worst = std::max(worst, asymmetry(m.matrix));
  }
  return {worst < 1e-9, "max member asymmetry " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classical limits and class equivalence", theorems},
      {"unitarity and matrix-free agreement", unitarity},
      {"cycle closed form and predictions", cycles},
      {"graph breaking on cycles", breaking},
      {"symmetric fixed points", symmetric_fixed_points},
      {"two-node reproduction", two_node},
      {"two-node circuit verification", circuit},
      {"sampler statistics and reproducibility", sampler},
      {"symmetry breaking and ranking", symmetry_breaking},
      {"symmetric circulant regression", circulant_regression},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
