#include <doctest.h>

#include <string>

#include "sqw/cycle.hpp"
#include "sqw/errors.hpp"
#include "sqw/graph_io.hpp"
#include "sqw/instances.hpp"
#include "sqw/random.hpp"

using namespace sqw;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++hits;
  return hits;
}

}  // namespace

TEST_CASE("csv round trip") {
  const auto g = two_node_example();
  const auto text = serialize(g, Format::matrix_csv);
  CHECK(text.rfind("n=2;orientation=column-stochastic\n", 0) == 0);
  CHECK(deserialize(text, Format::matrix_csv).max_abs_diff(g) < 1e-12);
}

TEST_CASE("json round trip") {
  const auto g = star_core_example();
  const auto text = serialize(g, Format::edge_list_json);
  CHECK(deserialize(text, Format::edge_list_json).max_abs_diff(g) < 1e-12);
}

TEST_CASE("property: round trip over random matrices") {
  WalkRng rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto g = random_stochastic(2 + static_cast<std::size_t>(k % 10), rng);
    CHECK(deserialize(to_csv(g), Format::matrix_csv).max_abs_diff(g) < 1e-12);
    CHECK(deserialize(to_edge_list_json(g), Format::edge_list_json).max_abs_diff(g) < 1e-12);
  }
}

TEST_CASE("dot export") {
  const auto dot = to_dot(cycle_graph(6), "c6");
  CHECK(count(dot, "->") == 12);
  CHECK(count(dot, "weight=0.500000") == 12);
  CHECK(count(dot, "label=\"0.500000\"") == 12);
  CHECK_THROWS_AS(deserialize(dot, Format::dot), InvalidArgument);
}

TEST_CASE("parse errors carry a locus") {
  CHECK_THROWS_AS(deserialize("", Format::matrix_csv), ParseError);
  CHECK_THROWS_AS(deserialize("", Format::edge_list_json), ParseError);
  CHECK_THROWS_AS(deserialize("n=2;orientation=row-stochastic\n1,0\n0,1\n", Format::matrix_csv), ParseError);
  try {
    deserialize("n=2;orientation=column-stochastic\n1,0\n0,x\n", Format::matrix_csv);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.field() == 2);
  }
  CHECK_THROWS_AS(deserialize("n=2;orientation=column-stochastic\n1,0\n", Format::matrix_csv), ParseError);
  CHECK_THROWS_AS(deserialize("n=2;orientation=column-stochastic\n1,0,0\n0,1\n", Format::matrix_csv), ParseError);
  CHECK_THROWS_AS(deserialize(R"({"n":2,"edges":[{"from":0,"to":5,"w":1}]})", Format::edge_list_json), ParseError);
  CHECK_THROWS_AS(deserialize(R"({"n":2,"edges":[{"from":0,"to":1,"w":1},{"from":0,"to":1,"w":1}]})",
                              Format::edge_list_json),
                  ParseError);
}

TEST_CASE("content errors") {
  CHECK_THROWS_AS(deserialize("n=2;orientation=column-stochastic\n0.5,0\n0.4,1\n", Format::matrix_csv),
                  NotStochastic);
  CHECK_THROWS_AS(deserialize("n=2;orientation=column-stochastic\n0,0\n1,0\n", Format::matrix_csv), DanglingNode);
  const auto patched =
      deserialize("n=2;orientation=column-stochastic\n0,0\n1,0\n", Format::matrix_csv, {.patch_dangling = true});
  CHECK(patched(0, 1) == 0.5);
}

TEST_CASE("json edge lists are normalized") {
  const auto g = deserialize(R"({"n":2,"edges":[{"from":0,"to":1,"w":2},{"from":1,"to":0,"w":1},{"from":1,"to":1,"w":3}]})",
                             Format::edge_list_json);
  CHECK(g(1, 0) == 1.0);
  CHECK(g(0, 1) == doctest::Approx(0.25));
}

TEST_CASE("format names") {
  CHECK(parse_format("csv") == Format::matrix_csv);
  CHECK(parse_format("edge-list-json") == Format::edge_list_json);
  CHECK(parse_format("dot") == Format::dot);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}
