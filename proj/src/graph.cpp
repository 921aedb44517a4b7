#include "oneplanar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace oneplanar {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw GraphError("self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = total / 2;
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw GraphError("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    list.emplace_back(a, b);
  }
  return from_edges(n, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw GraphError("complete_multipartite needs at least one part");
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 1) throw GraphError("part sizes must be positive");
    part.insert(part.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part[static_cast<std::size_t>(i)] != part[static_cast<std::size_t>(j)]) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph complete_multipartite(std::initializer_list<int> sizes) {
  std::vector<int> s(sizes);
  return complete_multipartite(std::span<const int>(s));
}

Graph cube_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 8; ++i)
    for (int b = 0; b < 3; ++b) {
      int j = i ^ (1 << b);
      if (i < j) e.emplace_back(i, j);
    }
  return Graph::from_edges(8, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (const Edge& x : b.edges()) e.emplace_back(x.u + a.order(), x.v + a.order());
  return Graph::from_edges(a.order() + b.order(), e);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  auto e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph::from_edges(g.order(), e);
}

Graph remove_edge(const Graph& g, Edge r) {
  auto e = g.edges();
  std::erase(e, r);
  return Graph::from_edges(g.order(), e);
}

namespace {

// Component labels, optionally with some vertices deleted.
int label_components(const Graph& g, std::vector<int>& label, const std::vector<char>* removed = nullptr) {
  const int n = g.order();
  label.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    if (removed && (*removed)[static_cast<std::size_t>(s)]) continue;
    label[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] >= 0) continue;
        if (removed && (*removed)[static_cast<std::size_t>(w)]) continue;
        label[static_cast<std::size_t>(w)] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

int component_count(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label);
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (index[static_cast<std::size_t>(v)] >= 0) throw GraphError("induced_subgraph: repeated vertex " + std::to_string(v));
    index[static_cast<std::size_t>(v)] = k++;
  }
  std::vector<Edge> e;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (index[static_cast<std::size_t>(w)] >= 0 && v < w)
        e.emplace_back(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
  return Graph::from_edges(k, e);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("permutation size mismatch");
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
  return Graph::from_edges(g.order(), e);
}

std::optional<std::pair<Vertex, Vertex>> find_separation_pair(const Graph& g) {
  const int n = g.order();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> label;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a; b < n; ++b) {
      removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(b)] = 1;
      const int remaining = n - (a == b ? 1 : 2);
      const int comps = label_components(g, label, &removed);
      removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(b)] = 0;
      if (remaining > 0 && comps > 1) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_three_connected(const Graph& g) {
  if (g.order() < 4) return false;
  if (!is_connected(g)) return false;
  return !find_separation_pair(g).has_value();
}

// --- graph6 ---------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  text = strip_line(text);
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: truncated record", base + i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
    return c - 63;
  };
  std::size_t pos = 0;
  long long n = 0;
  if (text.empty()) throw ParseError("graph6: empty record", base);
  int first = byte_at(0);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~' prefix: either 3 or 6 following bytes.
    if (text.size() > 1 && byte_at(1) == 63) {
      if (text.size() > 2 && byte_at(2) == 63) throw ParseError("graph6: malformed length prefix", base + 2);
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(2 + static_cast<std::size_t>(k));
      pos = 8;
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(1 + static_cast<std::size_t>(k));
      pos = 4;
      if (n < 63) throw ParseError("graph6: malformed length prefix", base + 1);
    }
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large", base);
  const long long bits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != pos + nbytes) {
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " adjacency bytes, found " +
                         std::to_string(text.size() >= pos ? text.size() - pos : 0),
                     base + std::min(text.size(), pos + nbytes));
  }
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbytes > 0) {
    int last = byte_at(pos + nbytes - 1);
    int pad = static_cast<int>(nbytes * 6 - static_cast<std::size_t>(bits));
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: padding bits set", base + pos + nbytes - 1);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_line(text.substr(start, end - start));
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("graph6 line: ") + e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

// --- edge list -------------------------------------------------------------

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  // Returns the next integer and its byte offset, or nullopt at end of input.
  std::optional<std::pair<long long, std::size_t>> next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
    if (pos < text.size() && text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      return next();
    }
    if (pos >= text.size()) return std::nullopt;
    long long value = 0;
    const std::size_t at = pos;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("edge list: expected an integer", at);
    pos = static_cast<std::size_t>(ptr - text.data());
    return std::make_pair(value, at);
  }
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok{text};
  auto n = tok.next();
  auto m = tok.next();
  if (!n || !m) throw ParseError("edge list: missing 'n m' header", text.size());
  if (n->first < 0) throw ParseError("edge list: negative vertex count", n->second);
  std::vector<Edge> edges;
  for (long long i = 0; i < m->first; ++i) {
    auto a = tok.next();
    auto b = tok.next();
    if (!a || !b) throw ParseError("edge list: expected " + std::to_string(m->first) + " edges", text.size());
    if (a->first < 0 || a->first >= n->first) throw ParseError("edge list: endpoint out of range", a->second);
    if (b->first < 0 || b->first >= n->first) throw ParseError("edge list: endpoint out of range", b->second);
    if (a->first == b->first) throw ParseError("edge list: self-loop", a->second);
    edges.emplace_back(static_cast<int>(a->first), static_cast<int>(b->first));
  }
  if (auto extra = tok.next()) throw ParseError("edge list: trailing data", extra->second);
  return Graph::from_edges(static_cast<int>(n->first), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph_any(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
  if (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '#')) return parse_edge_list(text);
  return parse_graph6(text.substr(i));
}

}  // namespace oneplanar
