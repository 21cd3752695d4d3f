#include <doctest.h>

#include "nsplit/errors.hpp"
#include "nsplit/generator.hpp"
#include "nsplit/multigraph.hpp"
#include "nsplit/necklace.hpp"

#include "support/oracles.hpp"

using namespace nsplit;

TEST_CASE("random necklaces are reproducible") {
  CHECK(random_necklace(3, 5, 7) == random_necklace(3, 5, 7));
  CHECK(random_necklace(6, 7, 123) == random_necklace(6, 7, 123));
}

TEST_CASE("random necklaces obey the construction bounds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 1 + seed % 8;
    Necklace nk = random_necklace(n, 7, seed * 71 + 3);
    CHECK(nk.color_count() == static_cast<std::size_t>(n));
    long long total = 0;
    for (const auto& [token, points] : nk.colors()) {
      CHECK(points.size() % 2 == 1);
      CHECK(points.size() <= 7);
      total += static_cast<long long>(points.size());
    }
    // coordinates are exactly 1..total
    CHECK(nk.sequence().front().coordinate == Rational(1));
    CHECK(nk.sequence().back().coordinate == Rational(total));
  }
}

TEST_CASE("degenerate bounds") {
  Necklace nk = random_necklace(1, 1, 0);
  CHECK(nk.color_count() == 1);
  CHECK(nk.total_points() == 1);
  CHECK_THROWS_AS(random_necklace(0, 5, 0), MalformedInput);
  CHECK_THROWS_AS(random_necklace(3, 4, 0), MalformedInput);
  CHECK_THROWS_AS(random_necklace(3, 0, 0), MalformedInput);
}

TEST_CASE("a Eulerian walk of the triangle gives the abca shape") {
  Multigraph triangle = testsupport::multigraph_from_walk({"a", "b", "c", "a"});
  Necklace nk = necklace_from_multigraph(triangle, 0);
  CHECK(build_walk_graph(nk) == triangle);
  for (const auto& [token, points] : nk.colors()) CHECK(points.size() % 2 == 1);
}

TEST_CASE("single-edge and double-edge graphs round-trip") {
  Multigraph edge;
  edge.add_vertex("a");
  edge.add_vertex("b");
  edge.add_edge("a", "b");
  Necklace nk = necklace_from_multigraph(edge, 1);
  CHECK(build_walk_graph(nk) == edge);

  Multigraph doubled = testsupport::multigraph_from_walk({"a", "b", "a"});
  nk = necklace_from_multigraph(doubled, 2);
  CHECK(build_walk_graph(nk) == doubled);
  CHECK(nk.color_string() == std::vector<std::string>{"a", "b", "a"});
}

TEST_CASE("walk-graph round trip over random semi-Eulerian graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Multigraph g = testsupport::random_walk_multigraph(2 + seed % 6, 2 + seed % 12, seed * 5 + 1);
    Necklace nk = necklace_from_multigraph(g, seed);
    CHECK(build_walk_graph(nk) == g);
  }
}

TEST_CASE("graphs without a Eulerian path are rejected") {
  Multigraph star;
  for (const char* v : {"c", "x", "y", "z"}) star.add_vertex(v);
  star.add_edge("c", "x");
  star.add_edge("c", "y");
  star.add_edge("c", "z");
  CHECK_THROWS_AS(necklace_from_multigraph(star, 0), DomainViolation);
  CHECK_THROWS_AS(necklace_from_multigraph(Multigraph{}, 0), MalformedInput);
}

TEST_CASE("rejection sampling for separable instances") {
  auto nk = random_separable_necklace(3, 1, 42, 10000);
  REQUIRE(nk.has_value());
  CHECK(sep_by_definition(*nk) <= 3);

  CHECK_FALSE(random_separable_necklace(3, 1, 42, 0).has_value());
}

TEST_CASE("interval chains are minimally separable") {
  Necklace chain = testsupport::interval_chain(5, 3);
  CHECK(sep_by_definition(chain) == 4);  // n - 1, accepted for any gap
}
