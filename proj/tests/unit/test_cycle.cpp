#include <doctest.h>

#include <numeric>

#include "sqw/cycle.hpp"
#include "sqw/errors.hpp"
#include "sqw/semiclassical.hpp"

using namespace sqw;

using Parts = std::vector<std::vector<std::size_t>>;

TEST_CASE("cycle graph") {
  const auto g = cycle_graph(6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(g((i + 1) % 6, i) == 0.5);
    CHECK(g((i + 5) % 6, i) == 0.5);
  }
  const auto c4 = cycle_graph(4);
  // bipartite: even nodes only reach odd nodes
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if ((i + j) % 2 == 0) CHECK(c4(j, i) == 0.0);
  CHECK_THROWS_AS(cycle_graph(2), TooSmall);
  CHECK_THROWS_AS(cycle_semiclassical(1, 1), TooSmall);
}

TEST_CASE("closed form members") {
  const auto t2 = cycle_semiclassical(6, 2);
  CHECK(t2(2, 0) == 0.5);
  CHECK(t2(4, 0) == 0.5);
  const auto t3 = cycle_semiclassical(6, 3);
  for (std::size_t i = 0; i < 6; ++i) CHECK(t3((i + 3) % 6, i) == 1.0);
  CHECK(cycle_semiclassical(6, 6).max_abs_diff(TransitionMatrix::identity(6)) == 0.0);
  CHECK(cycle_semiclassical(7, 14).max_abs_diff(TransitionMatrix::identity(7)) == 0.0);
}

TEST_CASE("predictions") {
  const auto p6 = cycle_predictions(6);
  CHECK(p6.distinct_count == 4);
  CHECK(p6.family_period == 6);
  CHECK(p6.unitary_period == 6);
  const auto p7 = cycle_predictions(7);
  CHECK(p7.distinct_count == 4);
  CHECK(p7.family_period == 7);
  CHECK(p7.unitary_period == 14);
  const auto p3 = cycle_predictions(3);
  CHECK(p3.distinct_count == 2);
  CHECK(p3.family_period == 3);
  CHECK(p3.unitary_period == 6);
  CHECK_THROWS_AS(cycle_predictions(2), TooSmall);
}

TEST_CASE("property: closed form equals the general pipeline") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto family = build_family(cycle_graph(n), WalkClass::I, static_cast<int>(2 * n));
    for (int t = 1; t <= static_cast<int>(2 * n); ++t) CHECK(family.at(t).max_abs_diff(cycle_semiclassical(n, t)) < 1e-12);
  }
}

TEST_CASE("property: predictions match measurement") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto expected = cycle_predictions(n);
    const auto family = build_family(cycle_graph(n), WalkClass::I, static_cast<int>(2 * n));
    CHECK(family_period(family) == expected.family_period);
    CHECK(distinct_matrices(family) == expected.distinct_count);
    CHECK(unitary_period(cycle_graph(n), static_cast<int>(2 * n)) == expected.unitary_period);
  }
}

TEST_CASE("graph breaking") {
  CHECK(components(cycle_semiclassical(6, 2)) == Parts{{0, 2, 4}, {1, 3, 5}});
  CHECK(components(cycle_semiclassical(6, 3)) == Parts{{0, 3}, {1, 4}, {2, 5}});
  CHECK(components(cycle_semiclassical(6, 6)) == Parts{{0}, {1}, {2}, {3}, {4}, {5}});
  CHECK(components(cycle_semiclassical(7, 2)) == Parts{{0, 1, 2, 3, 4, 5, 6}});
  CHECK(components(cycle_semiclassical(6, 1)).size() == 1);
}

TEST_CASE("7-cycle t_q = 2 support is the chain 0-2-4-6-1-3-5") {
  const auto m = cycle_semiclassical(7, 2);
  const std::size_t chain[] = {0, 2, 4, 6, 1, 3, 5};
  for (std::size_t k = 0; k < 7; ++k) {
    const auto a = chain[k];
    const auto b = chain[(k + 1) % 7];
    CHECK(m(b, a) == 0.5);
    CHECK(m(a, b) == 0.5);
  }
}

TEST_CASE("property: component count is gcd(n, t_q)") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (int t = 1; t <= static_cast<int>(2 * n); ++t) {
      const auto parts = components(cycle_semiclassical(n, t));
      CHECK(parts.size() == std::gcd(n, static_cast<std::size_t>(t)));
    }
  }
}

TEST_CASE("components of directed supports") {
  // 0 -> 1 -> 2 -> 0 plus a sink 3 reachable from 2
  const auto m = TransitionMatrix::from_rows({{0, 0, 0.5, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0.5, 1}});
  CHECK(components(m) == Parts{{0, 1, 2}, {3}});
}
