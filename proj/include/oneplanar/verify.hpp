#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "oneplanar/one_planarity.hpp"

namespace oneplanar {

/// Self-contained, replayable record of a verification run.
struct VerificationReport {
  static constexpr int kFormatVersion = 1;

  std::string kind;
  bool certifying = false;
  std::vector<std::string> failures;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> summary;
  double seconds = 0;

  /// With normalize_timing, every "seconds" field is zeroed so that two runs
  /// with equal parameters compare byte for byte.
  nlohmann::ordered_json to_json(bool normalize_timing = false) const;
  std::string dump(bool normalize_timing = false) const;
  std::string to_text() const;
};

struct TheoremOptions {
  int n_min = 8;
  int n_max = 12;
  /// Sizes up to this are also enumerated by the brute-force oracle.
  int oracle_max_n = 10;
  int jobs = 1;
};

/// Enumerates every optimal 1-planar graph with n_min <= n <= n_max through
/// quadrangulations, validates each augmented drawing and searches for lexicographic
/// factorizations. Certifies iff the only reducible one is K_{2,2,2,2} at n = 8 with
/// exactly the factorizations (K4, 2K1) and (K2, C4).
VerificationReport verify_main_theorem(const TheoremOptions& options = {});

struct CorollaryOptions {
  /// Every reducible graph on n in {6, 8} ∪ [9, exhaustive_max_n] vertices is checked.
  int exhaustive_max_n = 10;
  int tight_max_k = 5;
  /// tight_family(k) is also confirmed by search for k up to this.
  int tight_search_max_k = 3;
  int inequality_max_n = 1000;
  /// G∘2K1 is searched for every G on up to this many vertices.
  int coro1_max_n = 5;
  SearchBudget budget{20'000'000, 300};
  int jobs = 1;
};

VerificationReport verify_corollaries(const CorollaryOptions& options = {});

struct LemmaOptions {
  std::uint64_t seed = 1;
  int random_pairs = 200;
  SearchBudget budget{20'000'000, 300};
  /// Skip the products with a 4-vertex right factor (n up to 16).
  bool include_lemma4 = true;
  int jobs = 1;
};

VerificationReport verify_lex_small_lemmas(const LemmaOptions& options = {});

/// True iff h is isomorphic to a subgraph (not necessarily induced) of g.
bool is_subgraph(const Graph& h, const Graph& g);

}  // namespace oneplanar
