#include "oneplanar/bounds.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <map>
#include <set>
#include <sstream>

namespace oneplanar {

std::int64_t max_edges_1planar(int n) {
  if (n < 3) throw GraphError("max_edges_1planar: n must be at least 3");
  if (n <= 6) return static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n == 7 || n == 9) return 4LL * n - 9;
  return 4LL * n - 8;
}

Rational maximal_1planar_lower_bound(int n) {
  if (n < 4) throw GraphError("maximal_1planar_lower_bound: n must be at least 4");
  return Rational(20 * static_cast<std::int64_t>(n), 9) - Rational(10, 3);
}

bool is_cactus(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return false;
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                   boost::property<boost::edge_index_t, std::size_t>>;
  BG bg(static_cast<std::size_t>(g.order()));
  std::size_t k = 0;
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), k++, bg);
  std::vector<std::size_t> comp(boost::num_edges(bg));
  auto comp_map = boost::make_iterator_property_map(comp.begin(), boost::get(boost::edge_index, bg));
  std::size_t blocks = boost::biconnected_components(bg, comp_map);
  std::vector<std::size_t> edges(blocks, 0);
  std::vector<std::set<std::size_t>> verts(blocks);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    std::size_t b = comp[boost::get(boost::edge_index, bg, *it)];
    ++edges[b];
    verts[b].insert(boost::source(*it, bg));
    verts[b].insert(boost::target(*it, bg));
  }
  for (std::size_t b = 0; b < blocks; ++b)
    if (edges[b] != 1 && edges[b] != verts[b].size()) return false;
  return true;
}

std::int64_t cactus_edge_bound(int n) {
  if (n < 1) throw GraphError("cactus_edge_bound: n must be at least 1");
  return 3LL * (n - 1) / 2;
}

std::optional<std::int64_t> reducible_1planar_max_edges(int n) {
  if (n < 4) return std::nullopt;
  bool composite = false;
  for (int d = 2; d * d <= n; ++d) composite = composite || n % d == 0;
  if (!composite) return std::nullopt;
  if (n == 4) return 6;
  if (n == 8) return 24;
  return 4LL * n - 9;
}

BoundRow bound_row(int n) {
  BoundRow r;
  r.n = n;
  if (n >= 3) r.max_1planar_edges = max_edges_1planar(n);
  if (n >= 4) r.maximal_1planar_lower_bound = maximal_1planar_lower_bound(n);
  r.cactus_max_edges = n >= 1 ? cactus_edge_bound(n) : 0;
  r.reducible_1planar_max_edges = reducible_1planar_max_edges(n);
  return r;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::pair<Graph, OnePlaneDrawing> tight_family(int k) {
  if (k < 2) throw GraphError("tight_family: k must be at least 2");
  const int n = 3 * k;
  auto at = [](int level, int pos) { return 3 * level + (pos + 3) % 3; };
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i)
    for (int p = 0; p < 3; ++p) {
      auto& r = rot[static_cast<std::size_t>(at(i, p))];
      if (i > 0) r.push_back(at(i - 1, p));
      r.push_back(at(i, p + 1));
      if (i + 1 < k) r.push_back(at(i + 1, p));
      r.push_back(at(i, p - 1));
    }
  PlaneEmbedding skeleton(std::move(rot));
  std::vector<std::vector<Vertex>> quads;
  for (auto& f : skeleton.faces())
    if (f.size() == 4) quads.push_back(std::move(f));
  OnePlaneDrawing d = fill_faces_with_crossings(skeleton, quads);
  Graph g = d.base;
  return {std::move(g), std::move(d)};
}

namespace {

constexpr std::string_view kK2222 =
    "n 8 c 6\n"
    "x 6 3 1 7\nx 3 5 2 7\nx 2 1 0 3\nx 4 2 0 5\nx 4 1 6 0\nx 4 7 5 6\n"
    "r 0 11 2 10 1 12 4\nr 1 10 3 8 6 12 0\nr 2 5 9 3 10 0 11\nr 3 9 7 8 1 10 2\n"
    "r 4 5 11 0 12 6 13\nr 5 7 9 2 11 4 13\nr 6 12 1 8 7 13 4\nr 7 13 6 8 3 9 5\n"
    "r 8 3 7 6 1\nr 9 5 7 3 2\nr 10 2 3 1 0\nr 11 5 2 0 4\nr 12 0 1 6 4\nr 13 4 6 7 5\n";

bool coro1_ok(std::int64_t s, std::int64_t m) { return s == 4 ? m <= 6 : m <= 2 * s - 3; }

}  // namespace

OnePlaneDrawing k2222_drawing() { return parse_1pd(kK2222); }

bool coro1_bound_ok(const Graph& g) {
  if (g.order() < 2) throw GraphError("coro1_bound_ok: n must be at least 2");
  return coro1_ok(g.order(), static_cast<std::int64_t>(g.size()));
}

bool coro1_subgraph_bound_ok(const Graph& g, std::vector<Vertex>* witness) {
  const int n = g.order();
  if (n > 24) throw GraphError("coro1_subgraph_bound_ok: n above 24");
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size < 2) continue;
    std::int64_t m = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) m += __builtin_popcount(nbr[static_cast<std::size_t>(v)] & s);
    if (!coro1_ok(size, m / 2)) {
      if (witness) {
        witness->clear();
        for (int v = 0; v < n; ++v)
          if (s >> v & 1) witness->push_back(v);
      }
      return false;
    }
  }
  return true;
}

}  // namespace oneplanar
