#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/canon.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/quadgen.hpp"
#include "support.hpp"

using namespace oneplanar;

namespace {

std::vector<CanonicalForm> forms(const std::vector<Quadrangulation>& qs) {
  std::vector<CanonicalForm> out;
  for (const auto& q : qs) out.push_back(canonical_form(q.graph()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("pseudo-double wheels") {
  CHECK(is_isomorphic(pseudo_double_wheel(3).graph(), cube_graph()));
  for (int k = 3; k <= 8; ++k) {
    Quadrangulation q = pseudo_double_wheel(k);
    CHECK(q.order() == 2 * k + 2);
    CHECK(q.graph().size() == static_cast<std::size_t>(4 * k));
    CHECK(quadrangulation_problem(q.embedding()).empty());
    for (const auto& f : q.faces()) CHECK(f.size() == 4);
  }
}

TEST_CASE("quadrangulation counts") {
  const std::vector<std::size_t> expected{1, 0, 1, 1, 3};
  for (int n = 8; n <= 12; ++n) {
    CAPTURE(n);
    QuadgenStats stats;
    auto qs = enumerate_quadrangulations(n, &stats);
    CHECK(qs.size() == expected[static_cast<std::size_t>(n - 8)]);
    for (const auto& q : qs) {
      CHECK(q.graph().size() == static_cast<std::size_t>(2 * n - 4));
      CHECK(is_three_connected(q.graph()));
      CHECK(is_bipartite(q.graph()));
    }
  }
  CHECK(enumerate_quadrangulations(7).empty());
}

TEST_CASE("generator agrees with the brute-force oracle") {
  for (int n = 8; n <= 11; ++n) {
    CAPTURE(n);
    CHECK(forms(enumerate_quadrangulations(n)) == forms(oracle_quadrangulations(n, 11)));
  }
}

TEST_CASE("oracle ceiling") {
  CHECK_THROWS_AS(oracle_quadrangulations(11), GraphError);
  CHECK_NOTHROW(oracle_quadrangulations(8));
}

TEST_CASE("make_quadrangulation rejects other embeddings") {
  auto k4 = planar_embedding(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK_FALSE(quadrangulation_problem(*k4).empty());
  CHECK_THROWS_AS(make_quadrangulation(*k4), GraphError);

  auto c4 = planar_embedding(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK_THROWS_AS(make_quadrangulation(*c4), GraphError);

  auto cube = planar_embedding(cube_graph());
  REQUIRE(cube.has_value());
  CHECK(make_quadrangulation(*cube).order() == 8);
}

TEST_CASE("augmentation produces optimal drawings") {
  for (int n = 8; n <= 13; ++n) {
    for (const auto& q : enumerate_quadrangulations(n)) {
      auto a = augment_to_optimal(q);
      REQUIRE(a.drawing.has_value());
      CHECK(a.rejection.empty());
      CHECK(a.drawing->base.size() == static_cast<std::size_t>(4 * n - 8));
      CHECK(a.drawing->crossing_count() == n - 2);
      CHECK(validate_drawing(*a.drawing).ok());
      CHECK(check_optimal_structure(*a.drawing).ok());
      CHECK(is_isomorphic(planar_skeleton(*a.drawing).graph(), q.graph()));
    }
  }
  auto cube = augment_to_optimal(pseudo_double_wheel(3));
  REQUIRE(cube.drawing.has_value());
  CHECK(is_isomorphic(cube.drawing->base, complete_multipartite({2, 2, 2, 2})));
}
