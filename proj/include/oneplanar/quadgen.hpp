#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneplanar/canon.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace oneplanar {

/// A spherical embedding in which every face is a 4-face and the graph is
/// simple, bipartite and 3-connected. Built only through make_quadrangulation.
class Quadrangulation {
 public:
  const PlaneEmbedding& embedding() const { return embedding_; }
  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::vector<std::vector<Vertex>> faces() const { return embedding_.faces(); }

 private:
  friend Quadrangulation make_quadrangulation(PlaneEmbedding emb);
  PlaneEmbedding embedding_;
  Graph graph_;
};

/// Empty if emb is a simple 3-connected quadrangulation of the sphere,
/// otherwise the first violated property.
std::string quadrangulation_problem(const PlaneEmbedding& emb);

/// Throws GraphError with quadrangulation_problem() on invalid input.
Quadrangulation make_quadrangulation(PlaneEmbedding emb);

/// 2k-cycle 0..2k-1, pole 2k joined to the even cycle vertices and pole 2k+1
/// to the odd ones. k = 3 is the cube.
Quadrangulation pseudo_double_wheel(int k);

struct QuadgenStats {
  std::size_t generated = 0;  // candidates produced by moves, before rejection
  std::size_t rejected_invalid = 0;
  std::size_t duplicates = 0;
};

/// All simple 3-connected quadrangulations on n vertices, one per isomorphism
/// class, sorted by canonical form. Grown from the pseudo-double wheels by
/// vertex splitting (+1 vertex) and 4-cycle insertion into a face (+4
/// vertices), with canonical-form rejection at every size. Empty for n < 8.
std::vector<Quadrangulation> enumerate_quadrangulations(int n, QuadgenStats* stats = nullptr);

/// Brute-force reference: every bipartite graph with n vertices, 2n-4 edges
/// and minimum degree 3 that is 3-connected, planar and has only 4-faces.
/// Refused (GraphError) above `ceiling`.
std::vector<Quadrangulation> oracle_quadrangulations(int n, int ceiling = 10);

struct Augmentation {
  std::optional<OnePlaneDrawing> drawing;
  std::string rejection;  // set iff drawing is empty
};

/// Adds both diagonals of every face as a crossing pair.
Augmentation augment_to_optimal(const Quadrangulation& q);

}  // namespace oneplanar
