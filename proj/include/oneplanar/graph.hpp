#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oneplanar {

using Vertex = int;

/// Unordered vertex pair, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Throws GraphError naming the offending pair on self-loops or out-of-range
  /// endpoints. Duplicate pairs collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Optional vertex coloring; canonization and isomorphism respect it.
using Coloring = std::vector<int>;

Graph graph_from_edges(int n, std::span<const Edge> edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_multipartite(std::span<const int> sizes);
Graph complete_multipartite(std::initializer_list<int> sizes);
Graph cube_graph();

/// Disjoint union, vertices of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_edges(const Graph& g, std::span<const Edge> extra);
Graph remove_edge(const Graph& g, Edge e);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
bool is_bipartite(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
std::vector<int> degree_sequence(const Graph& g);

/// Relabels vertex v to perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

/// True iff no single vertex or pair of vertices disconnects g and g has at
/// least 4 vertices. Exhaustive pair search.
bool is_three_connected(const Graph& g);
/// A separating pair if one exists.
std::optional<std::pair<Vertex, Vertex>> find_separation_pair(const Graph& g);

// --- text formats -------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// One graph6 record; a leading ">>graph6<<" header and trailing newline are
/// tolerated.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Every non-empty line of a graph6 stream.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Auto-detects the edge-list format (first token is an integer followed by a
/// second integer on the same line) and falls back to graph6.
Graph parse_graph_any(std::string_view text);

}  // namespace oneplanar
