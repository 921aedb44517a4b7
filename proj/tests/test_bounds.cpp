#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/bounds.hpp"
#include "oneplanar/canon.hpp"
#include "oneplanar/lex.hpp"
#include "support.hpp"

using namespace oneplanar;

TEST_CASE("maximum edges of 1-planar graphs") {
  const std::vector<std::int64_t> expected{3, 6, 10, 15, 19, 24, 27, 32, 36, 40, 44, 48, 52, 56, 60, 64, 68, 72};
  for (int n = 3; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(max_edges_1planar(n) == expected[static_cast<std::size_t>(n - 3)]);
    if (n > 3) CHECK(max_edges_1planar(n) > max_edges_1planar(n - 1));
  }
  CHECK_THROWS(max_edges_1planar(2));
}

TEST_CASE("maximal 1-planar lower bound in exact arithmetic") {
  CHECK(maximal_1planar_lower_bound(4) == Rational(50, 9));
  CHECK(maximal_1planar_lower_bound(16) == Rational(290, 9));
  CHECK(maximal_1planar_lower_bound(17) == Rational(310, 9));
  CHECK(format_rational(maximal_1planar_lower_bound(7)) == "110/9");
  CHECK(format_rational(maximal_1planar_lower_bound(6)) == "10");
  CHECK_THROWS(maximal_1planar_lower_bound(3));
  for (int n = 4; n <= 1000; ++n) CHECK(maximal_1planar_lower_bound(n) - Rational(2 * n - 3) == Rational(2 * n - 3, 9));
  CHECK(maximal_1planar_lower_bound(17) > Rational(31));
  CHECK(maximal_1planar_lower_bound(16) > Rational(29));
}

TEST_CASE("cactus recognition") {
  CHECK(is_cactus(complete_graph(1)));
  CHECK(is_cactus(path_graph(5)));
  CHECK(is_cactus(star_graph(4)));
  CHECK(is_cactus(cycle_graph(7)));
  CHECK(is_cactus(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
  CHECK_FALSE(is_cactus(complete_graph(4)));
  CHECK_FALSE(is_cactus(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  CHECK_FALSE(is_cactus(empty_graph(2)));
  CHECK_FALSE(is_cactus(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 0}})));
}

TEST_CASE("cactus edge bound is attained by triangle chains") {
  CHECK(cactus_edge_bound(1) == 0);
  CHECK(cactus_edge_bound(2) == 1);
  CHECK(cactus_edge_bound(6) == 7);
  for (int n = 3; n <= 15; n += 2) {
    std::vector<Edge> e;
    for (int t = 0; t + 2 < n; t += 2) {
      e.emplace_back(t, t + 1);
      e.emplace_back(t + 1, t + 2);
      e.emplace_back(t, t + 2);
    }
    Graph g = Graph::from_edges(n, e);
    CHECK(is_cactus(g));
    CHECK(static_cast<std::int64_t>(g.size()) == cactus_edge_bound(n));
  }
}

TEST_CASE("reducible 1-planar edge maxima") {
  CHECK_FALSE(reducible_1planar_max_edges(3).has_value());
  CHECK(reducible_1planar_max_edges(4) == 6);
  CHECK_FALSE(reducible_1planar_max_edges(5).has_value());
  CHECK(reducible_1planar_max_edges(6) == 15);
  CHECK_FALSE(reducible_1planar_max_edges(7).has_value());
  CHECK(reducible_1planar_max_edges(8) == 24);
  CHECK(reducible_1planar_max_edges(9) == 27);
  CHECK(reducible_1planar_max_edges(12) == 39);
  CHECK_FALSE(reducible_1planar_max_edges(13).has_value());
}

TEST_CASE("bound rows") {
  BoundRow r = bound_row(7);
  CHECK(r.max_1planar_edges == 19);
  CHECK(r.maximal_1planar_lower_bound == Rational(110, 9));
  CHECK(r.cactus_max_edges == 9);
  CHECK_FALSE(r.reducible_1planar_max_edges.has_value());
  BoundRow small = bound_row(2);
  CHECK_FALSE(small.max_1planar_edges.has_value());
  CHECK_FALSE(small.maximal_1planar_lower_bound.has_value());
}

TEST_CASE("tight family") {
  for (int k = 2; k <= 6; ++k) {
    CAPTURE(k);
    auto [g, d] = tight_family(k);
    const int n = 3 * k;
    CHECK(g.order() == n);
    CHECK(static_cast<std::int64_t>(g.size()) == 4 * n - 9);
    CHECK(is_isomorphic(g, lex_product(path_graph(k), cycle_graph(3))));
    CHECK(is_reducible(g));
    CHECK(d.base == g);
    DrawingReport r = validate_drawing(d);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
  CHECK_THROWS(tight_family(1));
}

TEST_CASE("K2222 drawing") {
  OnePlaneDrawing d = k2222_drawing();
  CHECK(is_isomorphic(d.base, complete_multipartite({2, 2, 2, 2})));
  CHECK(validate_drawing(d).ok());
  CHECK(check_optimal_structure(d).ok());
  CHECK(drawing_isomorphic(d, testing_support::fixture_drawing("k2222_optimal.1pd")));
}

TEST_CASE("edge condition for G∘2K1") {
  CHECK(coro1_bound_ok(complete_graph(4)));
  CHECK(coro1_bound_ok(path_graph(2)));
  CHECK(coro1_bound_ok(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 3}})));
  CHECK_FALSE(coro1_bound_ok(complete_graph(5)));
  CHECK(coro1_bound_ok(complete_graph(3)));

  // K5 minus two edges plus three isolated vertices: the whole graph passes,
  // the five dense vertices do not.
  Graph g = remove_edge(remove_edge(complete_graph(5), Edge(0, 1)), Edge(2, 3));
  g = disjoint_union(g, empty_graph(3));
  CHECK(coro1_bound_ok(g));
  std::vector<Vertex> witness;
  CHECK_FALSE(coro1_subgraph_bound_ok(g, &witness));
  CHECK(witness == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(coro1_subgraph_bound_ok(cycle_graph(8)));
}
