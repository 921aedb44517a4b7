#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oneplanar/canon.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

/// G∘H with vertex (g, h) encoded as g * |V(H)| + h.
Graph lex_product(const Graph& left, const Graph& right);

/// |E(G∘H)| = nG·mH + nH²·mG.
std::uint64_t lex_edge_count(std::uint64_t n_left, std::uint64_t m_left, std::uint64_t n_right, std::uint64_t m_right);

/// Witness that a graph equals left∘right up to relabeling.
///
/// classes[i] is the set of vertices substituted for left-vertex i, and
/// class_isos[i][k] is the right-factor vertex that classes[i][k] maps to.
struct LexFactorization {
  Graph left;
  Graph right;
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::vector<Vertex>> class_isos;

  /// left graph6, right graph6 and the partition as semicolon-separated lists.
  std::string to_text() const;
};

/// Checks every LexFactorization invariant against g. Returns an empty string
/// on success, otherwise a description of the first violation.
std::string check_factorization(const Graph& g, const LexFactorization& f);

struct LexSearchOptions {
  /// Abandon a partial class as soon as its module closure is too large or
  /// needs a vertex that the ordered search can no longer add.
  bool prune = true;
  /// Stop after the first verified witness.
  bool first_only = false;
};

/// All factorizations into two non-trivial factors, one per class of
/// (left, right, partition) up to automorphisms of the input graph.
std::vector<LexFactorization> lex_factorizations(const Graph& g, const LexSearchOptions& opts = {});

bool is_reducible(const Graph& g);

/// Smallest module containing `seed`: repeatedly absorbs every outside vertex
/// that sees some but not all members.
std::vector<Vertex> module_closure(const Graph& g, std::vector<Vertex> seed);

}  // namespace oneplanar
