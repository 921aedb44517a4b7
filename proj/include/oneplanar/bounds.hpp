#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

using Rational = boost::rational<std::int64_t>;

/// Maximum edge count of a 1-planar graph on n >= 3 vertices:
/// C(n,2) for n <= 6, 4n-9 for n in {7, 9}, 4n-8 otherwise.
std::int64_t max_edges_1planar(int n);

/// 20n/9 - 10/3, the least edge count of a maximal 1-planar graph (n >= 4).
Rational maximal_1planar_lower_bound(int n);

/// Connected, and every block is a single edge or a cycle.
bool is_cactus(const Graph& g);

/// floor(3(n-1)/2), the most edges a cactus on n >= 1 vertices can have.
std::int64_t cactus_edge_bound(int n);

/// Largest edge count of a reducible 1-planar graph on n vertices: 24 at
/// n = 8, 4n-9 at n = 6 and n >= 9, 6 at n = 4 (K4 = K2∘K2). None for prime n
/// (no reducible graph exists) or n < 4.
std::optional<std::int64_t> reducible_1planar_max_edges(int n);

struct BoundRow {
  int n = 0;
  std::optional<std::int64_t> max_1planar_edges;
  std::optional<Rational> maximal_1planar_lower_bound;
  std::int64_t cactus_max_edges = 0;
  std::optional<std::int64_t> reducible_1planar_max_edges;
};
BoundRow bound_row(int n);
std::string format_rational(const Rational& r);

/// P_k∘C_3 (n = 3k, m = 4n-9) with its nested-triangle drawing: level i is
/// the triangle 3i, 3i+1, 3i+2, and each quadrilateral between consecutive
/// levels holds one crossing pair.
std::pair<Graph, OnePlaneDrawing> tight_family(int k);

/// The drawing of K_{2,2,2,2} on the cube skeleton: 8 vertices, 24 edges,
/// one crossing pair per cube face.
OnePlaneDrawing k2222_drawing();

/// m <= 2n-3 for n != 4, m <= 6 for n = 4 (necessary for G∘2K1 to be 1-planar).
bool coro1_bound_ok(const Graph& g);

/// The same bound for every induced subgraph on s >= 2 vertices. On failure,
/// `witness` receives the offending vertex set. Exhaustive over subsets, n <= 24.
bool coro1_subgraph_bound_ok(const Graph& g, std::vector<Vertex>* witness = nullptr);

}  // namespace oneplanar
