#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oneplanar/canon.hpp"
#include "oneplanar/lex.hpp"
#include "support.hpp"

using namespace oneplanar;
using testing_support::random_graph;

namespace {

using FormPair = std::pair<CanonicalForm, CanonicalForm>;

std::set<FormPair> factor_pairs(const std::vector<LexFactorization>& fs) {
  std::set<FormPair> out;
  for (const auto& f : fs) out.emplace(canonical_form(f.left), canonical_form(f.right));
  return out;
}

}  // namespace

TEST_CASE("products of named graphs") {
  Graph k2222 = complete_multipartite({2, 2, 2, 2});
  CHECK(is_isomorphic(lex_product(complete_graph(4), empty_graph(2)), k2222));
  CHECK(is_isomorphic(lex_product(complete_graph(2), cycle_graph(4)), k2222));
  CHECK(is_isomorphic(lex_product(cycle_graph(3), complete_graph(2)), complete_graph(6)));
  CHECK(is_isomorphic(lex_product(complete_graph(2), empty_graph(2)), cycle_graph(4)));
  Graph p = lex_product(path_graph(3), empty_graph(4));
  CHECK(is_isomorphic(p, Graph::from_edges(12, [] {
          std::vector<Edge> e;
          for (int a = 0; a < 4; ++a)
            for (int b = 4; b < 12; ++b) e.emplace_back(a, b);
          return e;
        }())));
}

TEST_CASE("vertex encoding g * |V(H)| + h") {
  Graph p = lex_product(path_graph(2), path_graph(2));
  CHECK(p.has_edge(0, 1));
  CHECK(p.has_edge(0, 2));
  CHECK(p.has_edge(1, 3));
  CHECK(p.has_edge(2, 3));
  CHECK(p.size() == 6);
}

TEST_CASE("edge count identity on random pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 4);
    Graph g = random_graph(a, 0.5, rng), h = random_graph(b, 0.5, rng);
    CHECK(lex_product(g, h).size() == lex_edge_count(static_cast<std::uint64_t>(a), g.size(), static_cast<std::uint64_t>(b), h.size()));
    if (a >= 2) CHECK(is_connected(lex_product(g, h)) == is_connected(g));
  }
}

TEST_CASE("K2222 has exactly the factorizations (K4, 2K1) and (K2, C4)") {
  auto fs = lex_factorizations(complete_multipartite({2, 2, 2, 2}));
  REQUIRE(fs.size() == 2);
  std::set<FormPair> expected{{canonical_form(complete_graph(4)), canonical_form(empty_graph(2))},
                              {canonical_form(complete_graph(2)), canonical_form(cycle_graph(4))}};
  CHECK(factor_pairs(fs) == expected);
  for (const auto& f : fs) CHECK(check_factorization(complete_multipartite({2, 2, 2, 2}), f).empty());
}

TEST_CASE("irreducible inputs") {
  CHECK_FALSE(is_reducible(complete_graph(5)));
  CHECK_FALSE(is_reducible(cycle_graph(6)));
  CHECK_FALSE(is_reducible(cube_graph()));
  CHECK_FALSE(is_reducible(path_graph(4)));
  CHECK(lex_factorizations(empty_graph(1)).empty());
}

TEST_CASE("factorization round trips") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 60) {
    const int a = 2 + static_cast<int>(rng() % 3), b = 2 + static_cast<int>(rng() % 3);
    Graph g = random_graph(a, 0.5, rng), h = random_graph(b, 0.5, rng);
    Graph p = lex_product(g, h);
    auto perm = testing_support::random_permutation(p.order(), rng);
    Graph q = permute(p, perm);
    auto fs = lex_factorizations(q);
    bool found = false;
    for (const auto& f : fs) {
      CHECK(check_factorization(q, f).empty());
      CHECK(is_isomorphic(lex_product(f.left, f.right), q));
      found = found || (is_isomorphic(f.left, g) && is_isomorphic(f.right, h));
    }
    CHECK(found);
    ++checked;
  }
}

TEST_CASE("pruned and unpruned searches agree") {
  std::mt19937_64 rng(17);
  LexSearchOptions full;
  full.prune = false;
  for (int i = 0; i < 40; ++i) {
    Graph g = (i % 2) ? random_graph(8, 0.5, rng) : lex_product(random_graph(2 + i % 3, 0.5, rng), random_graph(2, 0.5, rng));
    auto a = lex_factorizations(g);
    auto b = lex_factorizations(g, full);
    CHECK(a.size() == b.size());
    CHECK(factor_pairs(a) == factor_pairs(b));
  }
}

TEST_CASE("first_only stops early") {
  LexSearchOptions first;
  first.first_only = true;
  CHECK(lex_factorizations(complete_multipartite({2, 2, 2, 2}), first).size() == 1);
}

TEST_CASE("check_factorization rejects tampered witnesses") {
  auto fs = lex_factorizations(cycle_graph(4));
  REQUIRE_FALSE(fs.empty());
  LexFactorization bad = fs.front();
  std::swap(bad.classes[0][0], bad.classes[1][0]);
  CHECK_FALSE(check_factorization(cycle_graph(4), bad).empty());
  LexFactorization wrong_right = fs.front();
  wrong_right.right = complete_graph(2);
  CHECK_FALSE(check_factorization(cycle_graph(4), wrong_right).empty());
}

TEST_CASE("module closure") {
  Graph p = lex_product(path_graph(3), empty_graph(2));
  auto m = module_closure(p, {0, 1});
  CHECK(m == std::vector<Vertex>{0, 1});
  CHECK(module_closure(path_graph(4), {0, 1}).size() == 4);
}

TEST_CASE("text block") {
  auto fs = lex_factorizations(complete_multipartite({2, 2, 2, 2}));
  REQUIRE_FALSE(fs.empty());
  const std::string t = fs.front().to_text();
  CHECK(std::count(t.begin(), t.end(), '\n') == 3);
  CHECK(t.find(';') != std::string::npos);
}
