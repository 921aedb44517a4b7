#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

/// Canonical relabeling of a (colored) graph. Two graphs have equal forms iff
/// they are isomorphic by a color-preserving bijection.
struct CanonicalForm {
  int n = 0;
  std::vector<int> colors;   // colors in canonical vertex order
  std::vector<Edge> edges;   // canonical edge list, sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// Compact printable key (graph6 of the canonical graph plus colors).
  std::string key() const;
};

struct Canonization {
  CanonicalForm form;
  /// labeling[v] = canonical index of input vertex v.
  std::vector<int> labeling;
};

/// Partition refinement followed by a search over individualizations of the
/// first smallest non-singleton cell, keeping the lexicographically least
/// adjacency string. Automorphisms found along the way prune sibling orbits.
Canonization canonize(const Graph& g, const Coloring& coloring = {});
CanonicalForm canonical_form(const Graph& g, const Coloring& coloring = {});

/// Relabeling-invariant; for testing, an exhaustive minimum over all n!
/// permutations of the same adjacency string. n <= 9.
CanonicalForm brute_force_canonical_form(const Graph& g, const Coloring& coloring = {});

bool is_isomorphic(const Graph& g, const Graph& h, const Coloring& cg = {}, const Coloring& ch = {});

/// An isomorphism map g -> h (map[v] in h), if any.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

/// One representative of every isomorphism class of graphs on n vertices,
/// sorted by canonical form. Exhaustive over labeled graphs, n <= 7.
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace oneplanar
