#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/canon.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/planarity.hpp"
#include "support.hpp"

using namespace oneplanar;
using testing_support::drawing_fixtures;
using testing_support::fixture_drawing;

namespace {

std::vector<OnePlaneDrawing> fixture_set_with_variants() {
  std::vector<OnePlaneDrawing> out;
  std::mt19937_64 rng(8);
  for (const auto& name : drawing_fixtures()) {
    OnePlaneDrawing d = fixture_drawing(name);
    out.push_back(d);
    out.push_back(testing_support::relabel(d, testing_support::random_permutation(d.real_count(), rng)));
    out.push_back(mirrored(d));
  }
  return out;
}

}  // namespace

TEST_CASE("every fixture parses, validates and round trips") {
  for (const auto& name : drawing_fixtures()) {
    CAPTURE(name);
    OnePlaneDrawing d = fixture_drawing(name);
    DrawingReport r = validate_drawing(d);
    CHECK_MESSAGE(r.ok(), r.summary());
    CHECK(parse_1pd(emit_1pd(d)).base == d.base);
    CHECK(emit_1pd(parse_1pd(emit_1pd(d))) == emit_1pd(d));
    CHECK(d.planarization.is_spherical());
  }
}

TEST_CASE("fixture crossing counts") {
  CHECK(fixture_drawing("k2222_optimal.1pd").crossing_count() == 6);
  CHECK(fixture_drawing("k33_drawing_a.1pd").crossing_count() == 1);
  CHECK(fixture_drawing("k33_drawing_b.1pd").crossing_count() == 3);
  CHECK(fixture_drawing("k23_planar.1pd").crossing_count() == 0);
  CHECK(fixture_drawing("k23_one_crossing.1pd").crossing_count() == 1);
  CHECK(fixture_drawing("k23_two_crossings.1pd").crossing_count() == 2);
  CHECK(is_isomorphic(fixture_drawing("k33_drawing_b.1pd").base, complete_multipartite({3, 3})));
}

TEST_CASE("optimal structure checks on K2222") {
  OnePlaneDrawing d = fixture_drawing("k2222_optimal.1pd");
  DrawingReport r = check_optimal_structure(d);
  CHECK_MESSAGE(r.ok(), r.summary());
  for (auto name : {optimal_checks::kEdgeCount, optimal_checks::kQuadrangulation, optimal_checks::kOnePairPerFace,
                    optimal_checks::kAlternation, optimal_checks::kBipartite, optimal_checks::kKite}) {
    CHECK(r.passed(name));
  }
  CHECK(is_isomorphic(planar_skeleton(d).graph(), cube_graph()));
}

TEST_CASE("optimal structure checks reject non-optimal drawings") {
  DrawingReport r = check_optimal_structure(fixture_drawing("k33_drawing_a.1pd"));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed(optimal_checks::kEdgeCount));
  const Check* c = r.find(optimal_checks::kEdgeCount);
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->witnesses.empty());
}

TEST_CASE("faces of a drawing") {
  for (const auto& name : drawing_fixtures()) {
    CAPTURE(name);
    OnePlaneDrawing d = fixture_drawing(name);
    auto fs = faces(d);
    const auto V = static_cast<long>(d.planarization.order());
    const auto E = static_cast<long>(d.planarization.edge_count());
    CHECK(V - E + static_cast<long>(fs.size()) == 2);
    for (const auto& f : fs) {
      const bool has_dummy = std::any_of(f.corners.begin(), f.corners.end(), [&](Vertex v) { return d.is_dummy(v); });
      CHECK(f.crossed == has_dummy);
    }
  }
  auto fs = faces(fixture_drawing("k2222_optimal.1pd"));
  CHECK(fs.size() == 24);
  for (const auto& f : fs) CHECK(f.corners.size() == 3);
}

TEST_CASE("drawing isomorphism is an equivalence relation on the fixture set") {
  auto ds = fixture_set_with_variants();
  const std::size_t n = ds.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = drawing_isomorphic(ds[i], ds[j]);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
    }
  }
  // Each fixture is equivalent to its relabeled and mirrored copies only.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) CHECK(static_cast<bool>(rel[i][j]) == (i / 3 == j / 3));
}

TEST_CASE("drawing code is invariant under relabeling") {
  std::mt19937_64 rng(21);
  OnePlaneDrawing d = fixture_drawing("k33_drawing_b.1pd");
  for (int i = 0; i < 20; ++i) {
    auto e = testing_support::relabel(d, testing_support::random_permutation(d.real_count(), rng));
    CHECK(drawing_code(e) == drawing_code(d));
  }
}

TEST_CASE("an edge crossed twice is reported") {
  OnePlaneDrawing d = fixture_drawing("k23_two_crossings.1pd");
  REQUIRE(d.crossing_count() == 2);
  d.crossings[1].first = d.crossings[0].first;
  DrawingReport r = validate_drawing(d);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("edge-crossed-at-most-once"));
}

TEST_CASE("a dummy whose rotation does not alternate is reported") {
  OnePlaneDrawing d = fixture_drawing("k23_one_crossing.1pd");
  const Vertex dv = d.dummy_of(0);
  auto rot = d.planarization.rotations();
  auto& r = rot[static_cast<std::size_t>(dv)];
  std::swap(r[1], r[2]);
  d.planarization = PlaneEmbedding(rot);
  DrawingReport rep = validate_drawing(d);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.passed("dummy-alternation"));
}

TEST_CASE("incident crossing pairs are reported") {
  OnePlaneDrawing d = fixture_drawing("k23_one_crossing.1pd");
  d.crossings[0].second = Edge(d.crossings[0].first.u, d.crossings[0].second.v);
  CHECK_FALSE(validate_drawing(d).passed("crossing-edges-disjoint"));
}

TEST_CASE(".1pd parse errors name the byte offset") {
  auto offset_of = [](const std::string& text) -> long {
    try {
      (void)parse_1pd(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("n 2 k 0\n") == 0);
  CHECK(offset_of("n 2 c 0\nr 0 1\nr 1 0 z\n") == 14);
  CHECK(offset_of("n 2 c 0\nr 0 1\nq 1 0\n") == 14);
  CHECK(offset_of("n 2 c 0\nr 0 1\nr 0 1\n") == 14);
  CHECK(offset_of("n 2 c 0\nr 0 7\nr 1 0\n") == 8);
  CHECK(offset_of("n 2 c 0\nr 0 1\nr 1 0\n") == -1);
}

TEST_CASE("plane embeddings") {
  auto emb = planar_embedding(cube_graph());
  REQUIRE(emb.has_value());
  CHECK(emb->is_spherical());
  CHECK(emb->faces().size() == 6);
  CHECK(embedding_code(*emb) == embedding_code(emb->mirrored()));
  CHECK_FALSE(planar_embedding(complete_graph(5)).has_value());
  CHECK_FALSE(planar_embedding(complete_multipartite({3, 3})).has_value());

  // A rotation system of K4 on the torus fails the Euler check.
  PlaneEmbedding torus({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  CHECK_FALSE(torus.is_spherical());
  CHECK(PlaneEmbedding({{}, {}}).faces().size() == 2);
}

TEST_CASE("filling faces with crossings") {
  auto emb = planar_embedding(cube_graph());
  REQUIRE(emb.has_value());
  OnePlaneDrawing d = fill_faces_with_crossings(*emb, emb->faces());
  CHECK(d.base.size() == 24);
  CHECK(validate_drawing(d).ok());
  CHECK(check_optimal_structure(d).ok());
  CHECK(drawing_isomorphic(d, fixture_drawing("k2222_optimal.1pd")));

  auto k4 = planar_embedding(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK_THROWS_AS(fill_faces_with_crossings(*k4, {k4->faces().front()}), GraphError);

  auto c4 = planar_embedding(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK_THROWS_AS(fill_faces_with_crossings(*c4, c4->faces()), GraphError);
}

TEST_CASE("planarization edge list marks dummies") {
  const std::string s = emit_planarization_edges(fixture_drawing("k23_one_crossing.1pd"));
  CHECK(s.rfind("6 ", 0) == 0);
  CHECK(s.find("# dummies: 5") != std::string::npos);
}
