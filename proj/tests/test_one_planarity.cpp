#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/bounds.hpp"
#include "oneplanar/canon.hpp"
#include "oneplanar/lex.hpp"
#include "oneplanar/one_planarity.hpp"
#include "support.hpp"

using namespace oneplanar;
using testing_support::random_graph;

namespace {

void check_witness(const Graph& g, const OnePlanarVerdict& v) {
  REQUIRE(v.status == Verdict::Yes);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->base == g);
  DrawingReport r = validate_drawing(*v.witness);
  CHECK_MESSAGE(r.ok(), r.summary());
}

}  // namespace

TEST_CASE("known verdicts") {
  struct Case {
    const char* name;
    Graph g;
    Verdict expected;
  };
  const std::vector<Case> cases{
      {"K6", complete_graph(6), Verdict::Yes},
      {"K7", complete_graph(7), Verdict::No},
      {"K2222", complete_multipartite({2, 2, 2, 2}), Verdict::Yes},
      {"K33", complete_multipartite({3, 3}), Verdict::Yes},
      {"K44", complete_multipartite({4, 4}), Verdict::Yes},
      {"K45", complete_multipartite({4, 5}), Verdict::No},
      {"K2∘C4 minus nothing", lex_product(complete_graph(2), cycle_graph(4)), Verdict::Yes},
      {"K2∘(C3 plus pendant)", lex_product(complete_graph(2), Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})), Verdict::No},
      {"cube", cube_graph(), Verdict::Yes},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto v = is_one_planar(c.g);
    CHECK(v.status == c.expected);
    if (v.status == Verdict::Yes) check_witness(c.g, v);
  }
}

TEST_CASE("edge-count prefilter") {
  auto v = is_one_planar(complete_graph(7));
  CHECK(v.status == Verdict::No);
  CHECK(v.reason == "m=21 exceeds 4n-9=19");
  CHECK(v.stats.nodes == 0);
  auto w = is_one_planar(complete_graph(8));
  CHECK(w.reason == "m=28 exceeds 4n-8=24");
}

TEST_CASE("planar inputs are answered without search") {
  auto v = is_one_planar(cube_graph());
  CHECK(v.status == Verdict::Yes);
  CHECK(v.reason == "planar");
  CHECK(v.witness->crossing_count() == 0);
}

TEST_CASE("budget exhaustion gives unknown") {
  SearchBudget tiny;
  tiny.max_nodes = 10;
  auto v = is_one_planar(complete_multipartite({4, 5}), tiny);
  CHECK(v.status == Verdict::Unknown);
  CHECK(v.reason.find("budget exhausted") == 0);
}

TEST_CASE("agreement with the crossing-set search") {
  std::mt19937_64 rng(404);
  int yes = 0, no = 0;
  for (int i = 0; i < 80; ++i) {
    const int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, n == 7 ? 0.75 : 0.85, rng);
    auto a = is_one_planar(g);
    auto b = crossing_set_one_planar(g);
    CAPTURE(emit_graph6(g));
    REQUIRE(a.status != Verdict::Unknown);
    REQUIRE(b.status != Verdict::Unknown);
    CHECK(a.status == b.status);
    (a.status == Verdict::Yes ? yes : no)++;
    if (a.status == Verdict::Yes) check_witness(g, a);
  }
  CHECK(yes > 0);
}

TEST_CASE("crossing-set search confirms negative verdicts") {
  // Dense 7-vertex graphs under the 4n-9 edge limit.
  for (const char* g6 : {"F~v}w", "Fz|nw", "F^N~w"}) {
    CAPTURE(g6);
    Graph g = parse_graph6(g6);
    REQUIRE(static_cast<std::int64_t>(g.size()) <= max_edges_1planar(7));
    CHECK(is_one_planar(g).status == Verdict::No);
    auto b = crossing_set_one_planar(g);
    CHECK(b.status == Verdict::No);
    CHECK(b.reason == "no crossing set planarizes");
  }
}

TEST_CASE("crossing-set witnesses use the fewest crossings") {
  CHECK(crossing_set_one_planar(cube_graph()).reason == "0 crossings:");
  auto k6 = crossing_set_one_planar(complete_graph(6));
  CHECK(k6.status == Verdict::Yes);
  CHECK(k6.reason.rfind("3 crossings:", 0) == 0);
  auto k33 = crossing_set_one_planar(complete_multipartite({3, 3}));
  CHECK(k33.reason.rfind("1 crossing:", 0) == 0);
}

TEST_CASE("decision agrees with enumeration") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const int n = 4 + static_cast<int>(rng() % 4);
    Graph g = random_graph(n, 0.7, rng);
    if (!is_connected(g)) continue;
    auto v = is_one_planar(g);
    auto cat = enumerate_drawings(g);
    REQUIRE(cat.complete);
    CHECK((v.status == Verdict::Yes) == !cat.drawings.empty());
  }
}

TEST_CASE("drawing catalogs") {
  auto k23 = enumerate_drawings(complete_multipartite({2, 3}));
  auto k33 = enumerate_drawings(complete_multipartite({3, 3}));
  auto k2222 = enumerate_drawings(complete_multipartite({2, 2, 2, 2}));
  CHECK(k23.drawings.size() == 3);
  CHECK(k33.drawings.size() == 2);
  CHECK(k2222.drawings.size() == 1);
  for (const auto* cat : {&k23, &k33, &k2222}) {
    CHECK(cat->complete);
    for (std::size_t i = 0; i < cat->drawings.size(); ++i) {
      CHECK(validate_drawing(cat->drawings[i]).ok());
      for (std::size_t j = i + 1; j < cat->drawings.size(); ++j) CHECK_FALSE(drawing_isomorphic(cat->drawings[i], cat->drawings[j]));
    }
  }
  CHECK(check_optimal_structure(k2222.drawings.front()).ok());
  CHECK(drawing_isomorphic(k2222.drawings.front(), k2222_drawing()));

  // The catalog contains the fixture drawings.
  auto contains = [](const DrawingCatalog& cat, const OnePlaneDrawing& d) {
    return std::any_of(cat.drawings.begin(), cat.drawings.end(), [&](const OnePlaneDrawing& e) {
      return is_isomorphic(e.base, d.base) && e.crossing_count() == d.crossing_count() &&
             drawing_isomorphic(e, d);
    });
  };
  for (const char* name : {"k23_planar.1pd", "k23_one_crossing.1pd", "k23_two_crossings.1pd"})
    CHECK(contains(k23, testing_support::fixture_drawing(name)));
  for (const char* name : {"k33_drawing_a.1pd", "k33_drawing_b.1pd"}) CHECK(contains(k33, testing_support::fixture_drawing(name)));
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_drawings(empty_graph(3)), LimitError);
  CHECK_THROWS_AS(enumerate_drawings(complete_graph(10)), LimitError);
  EnumerationLimits wide;
  wide.max_n = 10;
  wide.max_m = 40;
  auto cat = enumerate_drawings(cycle_graph(10), wide);
  CHECK(cat.complete);
  const auto plane = std::count_if(cat.drawings.begin(), cat.drawings.end(), [](const OnePlaneDrawing& d) { return d.crossing_count() == 0; });
  CHECK(plane == 1);
  for (const auto& d : cat.drawings) CHECK(validate_drawing(d).ok());
}

TEST_CASE("subgraphs of a 1-planar graph are 1-planar") {
  Graph g = complete_multipartite({2, 2, 2, 2});
  for (const Edge& e : g.edges()) CHECK(is_one_planar(remove_edge(g, e)).status == Verdict::Yes);
  Graph k6 = complete_graph(6);
  for (const Edge& e : k6.edges()) CHECK(is_one_planar(remove_edge(k6, e)).status == Verdict::Yes);
}

TEST_CASE("disconnected inputs") {
  Graph g = disjoint_union(complete_graph(6), complete_multipartite({3, 3}));
  auto v = is_one_planar(g);
  CHECK(v.status == Verdict::Yes);
  if (v.witness) CHECK(validate_drawing(*v.witness).ok());
  CHECK(is_one_planar(disjoint_union(complete_graph(7), complete_graph(3))).status == Verdict::No);
}
