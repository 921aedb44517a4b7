#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneplanar/canon.hpp"
#include "oneplanar/verify.hpp"
#include "support.hpp"

using namespace oneplanar;

TEST_CASE("theorem report for n up to 10") {
  TheoremOptions o;
  o.n_max = 10;
  auto r = verify_main_theorem(o);
  CHECK(r.certifying);
  CHECK(r.failures.empty());
  CHECK(r.data["reducible_optimal_graphs"] == 1);
  CHECK(r.data["optimal_graphs"] == 2);
  const auto& w = r.data["reducible_witnesses"];
  REQUIRE(w.size() == 1);
  CHECK(w[0]["n"] == 8);
  CHECK(is_isomorphic(parse_graph6(w[0]["graph6"].get<std::string>()), complete_multipartite({2, 2, 2, 2})));
  CHECK(w[0]["factorizations"].size() == 2);
  CHECK(parse_1pd(w[0]["drawing"].get<std::string>()).base.size() == 24);
  for (const auto& row : r.data["per_n"]) CHECK(row["generator_validated"] == true);
  CHECK(r.data["validator_passes"]["kite-completion"] == 2);
  CHECK(r.data["validator_passes"]["unique-drawing"] == 1);
}

TEST_CASE("theorem report without n = 8 has no reducible graph") {
  TheoremOptions o;
  o.n_min = 9;
  o.n_max = 11;
  auto r = verify_main_theorem(o);
  CHECK(r.certifying);
  CHECK(r.data["reducible_optimal_graphs"] == 0);
  CHECK(r.data["per_n"][2]["generator_validated"] == "unvalidated-beyond-oracle");
}

TEST_CASE("reports are deterministic after timing normalization") {
  TheoremOptions o;
  o.n_max = 10;
  auto a = verify_main_theorem(o), b = verify_main_theorem(o);
  CHECK(a.dump(true) == b.dump(true));
  o.jobs = 3;
  CHECK(verify_main_theorem(o).dump(true) == a.dump(true));
  auto j = a.to_json(true);
  CHECK(j["format_version"] == VerificationReport::kFormatVersion);
  CHECK(j["seconds"] == 0);
  CHECK(j["data"]["per_n"][0]["seconds"] == 0);

  LemmaOptions l;
  l.random_pairs = 20;
  l.include_lemma4 = false;
  CHECK(verify_lex_small_lemmas(l).dump(true) == verify_lex_small_lemmas(l).dump(true));
}

TEST_CASE("corollary report") {
  CorollaryOptions o;
  o.exhaustive_max_n = 9;
  o.tight_max_k = 4;
  o.inequality_max_n = 200;
  o.coro1_max_n = 4;
  auto r = verify_corollaries(o);
  CHECK_MESSAGE(r.certifying, r.to_text());
  const auto& ineq = r.data["maximal_inequality"];
  CHECK(ineq["holds_for_all_n_from_17"] == true);
  CHECK(ineq["holds_at_16"] == true);
  CHECK(ineq["value_at_16"] == "290/9");
  for (const auto& row : r.data["tight_family"]) CHECK(row["m_equals_4n_minus_9"] == true);
  bool saw8 = false;
  for (const auto& row : r.data["reducible_bound"])
    if (row["n"] == 8) {
      saw8 = true;
      CHECK(row["attains_24"] == "K_{2,2,2,2} only");
    }
  CHECK(saw8);
}

TEST_CASE("lemma report") {
  LemmaOptions o;
  o.random_pairs = 50;
  auto r = verify_lex_small_lemmas(o);
  CHECK_MESSAGE(r.certifying, r.to_text());
  CHECK(r.data["edge_count_identity"]["passed"] == 50);
  CHECK(r.data["k2_product_characterization"]["cells"] == 18);
  CHECK(r.data["cactus_characterization"]["cells"] == 31);
  CHECK(r.data["large_right_factor"]["unknown"] == 0);
}

TEST_CASE("a tiny budget makes the lemma report non-certifying") {
  LemmaOptions o;
  o.random_pairs = 5;
  o.budget.max_nodes = 1;
  auto r = verify_lex_small_lemmas(o);
  CHECK_FALSE(r.certifying);
  CHECK(r.data["large_right_factor"]["unknown"].get<int>() > 0);
}

TEST_CASE("subgraph containment") {
  CHECK(is_subgraph(path_graph(4), cycle_graph(4)));
  CHECK(is_subgraph(empty_graph(4), cycle_graph(4)));
  CHECK_FALSE(is_subgraph(complete_graph(3), cycle_graph(4)));
  CHECK_FALSE(is_subgraph(star_graph(3), cycle_graph(4)));
  CHECK(is_subgraph(complete_multipartite({4, 5}), complete_multipartite({4, 8})));
  CHECK_FALSE(is_subgraph(cycle_graph(5), complete_graph(4)));
}
