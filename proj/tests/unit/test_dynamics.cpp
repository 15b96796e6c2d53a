#include <doctest.h>

#include <cmath>
#include <map>

#include "../support/dense_oracle.hpp"
#include "sqw/cycle.hpp"
#include "sqw/dynamics.hpp"
#include "sqw/errors.hpp"
#include "sqw/instances.hpp"
#include "sqw/random.hpp"

using namespace sqw;

TEST_CASE("evolve") {
  const auto g = two_node_example();
  const auto p0 = two_node_initial();
  CHECK(evolve(g, p0, 0).values() == p0.values());
  const auto p1 = evolve(g, p0, 1);
  CHECK(p1[0] == doctest::Approx(0.12).epsilon(1e-14));
  CHECK(p1[1] == doctest::Approx(0.88).epsilon(1e-14));
  const auto p2 = evolve(g, p0, 2);
  CHECK(p2[0] == doctest::Approx(0.188).epsilon(1e-14));
  CHECK(p2[1] == doctest::Approx(0.812).epsilon(1e-14));
  CHECK_THROWS_AS(evolve(g, ProbabilityVector::uniform(3), 1), DimensionMismatch);

  const auto series = evolve_series(g, p0, 3);
  REQUIRE(series.size() == 4);
  CHECK(series[3][1] == doctest::Approx(0.8188).epsilon(1e-14));
}

TEST_CASE("property: evolve conserves probability") {
  WalkRng rng(31);
  for (int k = 0; k < 20; ++k) {
    const auto g = random_stochastic(2 + static_cast<std::size_t>(k % 9), rng);
    for (const auto& p : evolve_series(g, ProbabilityVector::delta(g.size(), 0), 50)) {
      double total = 0.0;
      for (double x : p.values()) total += x;
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("limiting distributions") {
  SUBCASE("two-node walk converges to (2/11, 9/11)") {
    for (const auto& p0 : {two_node_initial(), ProbabilityVector::delta(2, 0), ProbabilityVector::delta(2, 1)}) {
      const auto r = limiting_distribution(two_node_example(), p0);
      CHECK(r.mode == LimitMode::converged);
      CHECK(r.distribution[1] == doctest::Approx(9.0 / 11.0).epsilon(1e-7));
    }
  }
  SUBCASE("symmetric walks fix the uniform start in one step") {
    WalkRng rng(12);
    const auto r = limiting_distribution(random_symmetric_stochastic(6, rng), ProbabilityVector::uniform(6));
    CHECK(r.mode == LimitMode::converged);
    CHECK(r.iterations == 1);
  }
  SUBCASE("4-cycle from a delta oscillates; the average is uniform") {
    const auto r = limiting_distribution(cycle_graph(4), ProbabilityVector::delta(4, 0));
    CHECK(r.mode == LimitMode::cesaro);
    for (double x : r.distribution.values()) CHECK(x == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("permutation member with period 2") {
    const auto r = limiting_distribution(cycle_semiclassical(6, 3), ProbabilityVector::delta(6, 1));
    CHECK(r.mode == LimitMode::cesaro);
    CHECK(r.distribution[1] == doctest::Approx(0.5));
    CHECK(r.distribution[4] == doctest::Approx(0.5));
  }
  SUBCASE("slow mixing exhausts the budget") {
    const auto m = TransitionMatrix::from_rows({{1 - 1e-7, 1e-7}, {1e-7, 1 - 1e-7}});
    const auto r = limiting_distribution(m, ProbabilityVector::delta(2, 0), 1e-8, 50);
    CHECK(r.mode == LimitMode::failed);
    CHECK(r.iterations == 50);
  }
  CHECK_THROWS_AS(limiting_distribution(two_node_example(), two_node_initial(), 0.0), InvalidArgument);
}

TEST_CASE("property: converged limits are fixed points") {
  WalkRng rng(41);
  for (int k = 0; k < 30; ++k) {
    const auto g = random_stochastic(2 + static_cast<std::size_t>(k % 8), rng);
    const auto r = limiting_distribution(g, ProbabilityVector::uniform(g.size()));
    REQUIRE(r.mode == LimitMode::converged);
    CHECK(l1_distance(evolve(g, r.distribution, 1).values(), r.distribution.values()) <= 10 * kLimitTolerance);
  }
}

TEST_CASE("property: symmetric matrices fix the uniform distribution") {
  WalkRng rng(51);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_symmetric_stochastic(2 + static_cast<std::size_t>(k % 9), rng);
    const auto u = ProbabilityVector::uniform(g.size());
    CHECK(l1_distance(evolve(g, u, 1).values(), u.values()) < 1e-12);
  }
}

TEST_CASE("rank order ties break by index") {
  CHECK(rank_order(ProbabilityVector({0.2, 0.5, 0.3})) == std::vector<std::size_t>{1, 2, 0});
  CHECK(rank_order(ProbabilityVector({0.25, 0.25, 0.25, 0.25})) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(rank_order(ProbabilityVector({0.5 - 1e-13, 0.5 + 1e-13})) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("semiclassical ranking") {
  SUBCASE("cycle averages to uniform") {
    const auto r = semiclassical_rank(cycle_graph(5), WalkClass::I, 10);
    for (double x : r.final_average) CHECK(x == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(r.ordering == std::vector<std::size_t>{0, 1, 2, 3, 4});
  }
  SUBCASE("two-node average is the mean of independent per-member limits") {
    const auto g = two_node_example();
    const auto r = semiclassical_rank(g, WalkClass::I, 3);
    const std::vector<double> raw(g.data().begin(), g.data().end());
    double mean = 0.0;
    for (int t = 1; t <= 3; ++t) mean += oracle::stationary(oracle::semiclassical(raw, 2, t, 1), 2, {0.5, 0.5})[1] / 3.0;
    CHECK(r.final_average[1] == doctest::Approx(mean).epsilon(1e-7));
    REQUIRE(r.running_average.size() == 3);
    CHECK(r.running_average[0][1] == doctest::Approx(9.0 / 11.0).epsilon(1e-7));
  }
  SUBCASE("star-core: hub first, secondary hub second, node 1 best leaf") {
    const auto r = semiclassical_rank(star_core_example(), WalkClass::I, 100);
    REQUIRE(r.ordering.size() == 7);
    CHECK(r.ordering[0] == 3);
    CHECK(r.ordering[1] == 4);
    const auto pos = [&](std::size_t node) {
      return std::find(r.ordering.begin(), r.ordering.end(), node) - r.ordering.begin();
    };
    CHECK(pos(1) < pos(0));
    CHECK(pos(1) < pos(2));
  }
  SUBCASE("an explicit initial distribution is honoured") {
    RankOptions options;
    options.initial = ProbabilityVector::delta(4, 0);
    const auto r = semiclassical_rank(cycle_graph(4), WalkClass::I, 2, options);
    CHECK(r.limits[0].mode == LimitMode::cesaro);
  }
  SUBCASE("failures surface as RankFailed") {
    RankOptions options;
    options.max_iter = 3;
    options.initial = ProbabilityVector::delta(2, 0);
    CHECK_THROWS_AS(semiclassical_rank(two_node_example(), WalkClass::I, 2, options), RankFailed);
  }
}

TEST_CASE("sampling") {
  SUBCASE("permutation member forces the path") {
    const auto tr = sample_trajectory(cycle_semiclassical(6, 3), 0, 6, 99, 3);
    CHECK(tr.nodes == std::vector<std::size_t>{0, 3, 0, 3, 0, 3, 0});
    CHECK(tr.t_q == 3);
  }
  SUBCASE("same seed, same trajectory") {
    const auto g = star_core_example();
    CHECK(sample_trajectory(g, 3, 200, 17).nodes == sample_trajectory(g, 3, 200, 17).nodes);
    CHECK(sample_trajectory(g, 3, 200, 17).nodes != sample_trajectory(g, 3, 200, 18).nodes);
  }
  SUBCASE("two-node single steps from node 0") {
    const auto batch = sample_batch(two_node_example(), 0, 1, 20000, 2024);
    double ones = 0.0;
    for (const auto& tr : batch) ones += tr.nodes[1] == 1 ? 1.0 : 0.0;
    CHECK(std::abs(ones / 20000.0 - 0.9) < 0.02);
  }
  SUBCASE("batches are independent of scheduling") {
    const auto g = star_core_example();
    const auto batch = sample_batch(g, 0, 30, 16, 5);
    for (std::size_t k = 0; k < batch.size(); ++k)
      CHECK(batch[k].nodes == sample_trajectory(g, 0, 30, WalkRng::derive(5, k)).nodes);
  }
  SUBCASE("every step follows a positive entry") {
    const auto g = cycle_semiclassical(7, 2);
    const auto tr = sample_trajectory(g, 0, 500, 3);
    for (std::size_t t = 0; t + 1 < tr.nodes.size(); ++t) CHECK(g(tr.nodes[t + 1], tr.nodes[t]) > 0.0);
  }
  CHECK_THROWS_AS(sample_trajectory(two_node_example(), 2, 1, 0), IndexOutOfRange);
}

TEST_CASE("property: empirical columns match the matrix") {
  WalkRng rng(61);
  const auto g = random_stochastic(5, rng);
  for (std::size_t x = 0; x < 5; ++x) {
    std::vector<double> freq(5, 0.0);
    for (const auto& tr : sample_batch(g, x, 1, 20000, 100 + x)) freq[tr.nodes[1]] += 1.0 / 20000.0;
    CHECK(l1_distance(freq, g.column(x)) < 0.05);
  }
}

TEST_CASE("asymmetry") {
  CHECK(asymmetry(cycle_graph(5)) == 0.0);
  CHECK(asymmetry(two_node_example()) == doctest::Approx(0.7));
  const auto family = build_family(star_core_example(), WalkClass::I, 6);
  CHECK(asymmetry(family.at(1)) < 1e-12);
  for (int t = 2; t <= 6; ++t) CHECK(asymmetry(family.at(t)) > 1e-6);
}
