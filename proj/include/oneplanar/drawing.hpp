#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oneplanar/graph.hpp"

namespace oneplanar {

/// Rotation system of a simple graph on the sphere: rotation[v] lists the
/// neighbors of v in cyclic order. Faces are the orbits of
/// (u -> v)  |->  (v -> successor of u around v).
class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;
  explicit PlaneEmbedding(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {}

  int order() const { return static_cast<int>(rotation_.size()); }
  std::size_t edge_count() const;
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  /// Neighbor following u in the rotation at v.
  Vertex successor(Vertex v, Vertex u) const;

  Graph graph() const;

  /// Each face as its cyclic vertex walk. Isolated vertices contribute one
  /// single-corner face.
  std::vector<std::vector<Vertex>> faces() const;

  /// Empty if the rotation is symmetric, simple and spherical (V - E + F = 2C);
  /// otherwise the first problem found.
  std::string check() const;
  bool is_spherical() const { return check().empty(); }

  PlaneEmbedding mirrored() const;

  friend bool operator==(const PlaneEmbedding&, const PlaneEmbedding&) = default;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// Canonical code of an embedded, vertex-colored graph up to orientation
/// preserving or reversing homeomorphism. Equal codes <=> isomorphic maps.
std::vector<int> embedding_code(const PlaneEmbedding& emb, const std::vector<int>& colors = {});

struct Crossing {
  Edge first;
  Edge second;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// A 1-plane drawing: the drawn graph, its crossing pairs, and the
/// planarization in which crossing i is the dummy vertex base.order() + i.
struct OnePlaneDrawing {
  Graph base;
  std::vector<Crossing> crossings;
  PlaneEmbedding planarization;

  int real_count() const { return base.order(); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool is_dummy(Vertex v) const { return v >= base.order(); }
  Vertex dummy_of(int crossing) const { return base.order() + crossing; }

  /// Edges of the base graph that take part in a crossing.
  std::vector<Edge> crossing_edges() const;
  bool is_crossing_edge(Edge e) const;

  /// Colors for the planarization: 0 real, 1 dummy.
  std::vector<int> vertex_colors() const;
};

/// A drawing with no crossings, from a plane embedding of g.
OnePlaneDrawing plane_drawing(const PlaneEmbedding& emb);

/// Inserts both diagonals of each listed 4-face as a crossing pair. Faces are
/// walks as returned by PlaneEmbedding::faces(). Throws GraphError if a face
/// is not a 4-cycle or a diagonal would duplicate an existing edge.
OnePlaneDrawing fill_faces_with_crossings(const PlaneEmbedding& skeleton, const std::vector<std::vector<Vertex>>& faces);

// --- reports ---------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

struct DrawingReport {
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(std::string_view name) const;
  bool passed(std::string_view name) const;
  std::string summary() const;
};

/// Structural validity of a 1-plane drawing. Violations are reported with
/// witnesses, never thrown.
DrawingReport validate_drawing(const OnePlaneDrawing& d);

/// Embedding of the planar skeleton: real vertices only, crossing edges
/// removed, rotations inherited.
PlaneEmbedding planar_skeleton(const OnePlaneDrawing& d);

struct DrawingFace {
  std::vector<Vertex> corners;
  bool crossed = false;
};
std::vector<DrawingFace> faces(const OnePlaneDrawing& d);

/// Checks every structural property of a drawing of an optimal 1-planar
/// graph: edge count 4n-8, skeleton is a simple 3-connected quadrangulation,
/// one crossing pair per skeleton face, crossing/non-crossing alternation at
/// every vertex, bipartite skeleton, kite completion around every crossing.
DrawingReport check_optimal_structure(const OnePlaneDrawing& d);

namespace optimal_checks {
inline constexpr std::string_view kEdgeCount = "edge-count-4n-8";
inline constexpr std::string_view kQuadrangulation = "skeleton-3connected-quadrangulation";
inline constexpr std::string_view kOnePairPerFace = "one-crossing-pair-per-face";
inline constexpr std::string_view kAlternation = "rotation-alternation";
inline constexpr std::string_view kBipartite = "skeleton-bipartite";
inline constexpr std::string_view kKite = "kite-completion";
}  // namespace optimal_checks

std::vector<int> drawing_code(const OnePlaneDrawing& d);
bool drawing_isomorphic(const OnePlaneDrawing& a, const OnePlaneDrawing& b);
OnePlaneDrawing mirrored(const OnePlaneDrawing& d);

// --- .1pd text format ------------------------------------------------------

/// line 1 "n <real> c <crossings>", one "x u1 v1 u2 v2" line per crossing,
/// one "r <vertex> <cyclic neighbors>" line per planarization vertex.
std::string emit_1pd(const OnePlaneDrawing& d);
OnePlaneDrawing parse_1pd(std::string_view text);

/// Planarization as an edge list with dummies marked, for layout tools.
std::string emit_planarization_edges(const OnePlaneDrawing& d);

}  // namespace oneplanar
