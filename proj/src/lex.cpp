#include "oneplanar/lex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace oneplanar {

Graph lex_product(const Graph& left, const Graph& right) {
  const int nl = left.order(), nr = right.order();
  std::vector<Edge> e;
  for (int g = 0; g < nl; ++g) {
    for (const Edge& h : right.edges()) e.emplace_back(g * nr + h.u, g * nr + h.v);
  }
  for (const Edge& ge : left.edges())
    for (int a = 0; a < nr; ++a)
      for (int b = 0; b < nr; ++b) e.emplace_back(ge.u * nr + a, ge.v * nr + b);
  return Graph::from_edges(nl * nr, e);
}

std::uint64_t lex_edge_count(std::uint64_t n_left, std::uint64_t m_left, std::uint64_t n_right, std::uint64_t m_right) {
  return n_left * m_right + n_right * n_right * m_left;
}

std::string LexFactorization::to_text() const {
  std::ostringstream os;
  os << emit_graph6(left) << '\n' << emit_graph6(right) << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) os << ';';
    for (std::size_t k = 0; k < classes[i].size(); ++k) {
      if (k) os << ',';
      os << classes[i][k];
    }
  }
  os << '\n';
  return os.str();
}

std::string check_factorization(const Graph& g, const LexFactorization& f) {
  const int nl = f.left.order(), nr = f.right.order();
  if (nl < 2 || nr < 2) return "trivial factor";
  if (nl * nr != g.order()) return "class sizes do not multiply to |V(G)|";
  if (static_cast<int>(f.classes.size()) != nl || f.class_isos.size() != f.classes.size()) return "class count mismatch";
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < nl; ++i) {
    const auto& cls = f.classes[static_cast<std::size_t>(i)];
    const auto& iso = f.class_isos[static_cast<std::size_t>(i)];
    if (static_cast<int>(cls.size()) != nr || iso.size() != cls.size()) return "class " + std::to_string(i) + " has wrong size";
    for (Vertex v : cls) {
      if (v < 0 || v >= g.order() || owner[static_cast<std::size_t>(v)] >= 0) return "classes do not partition V(G)";
      owner[static_cast<std::size_t>(v)] = i;
    }
    std::vector<int> seen(static_cast<std::size_t>(nr), 0);
    for (Vertex h : iso) {
      if (h < 0 || h >= nr || seen[static_cast<std::size_t>(h)]++) return "class_iso " + std::to_string(i) + " is not a bijection";
    }
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (g.has_edge(cls[a], cls[b]) != f.right.has_edge(iso[a], iso[b]))
          return "class " + std::to_string(i) + " does not induce the right factor";
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
      if (a == b) continue;
      if (g.has_edge(u, v) != f.left.has_edge(a, b))
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " disagrees with the left factor";
    }
  return {};
}

std::vector<Vertex> module_closure(const Graph& g, std::vector<Vertex> seed) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seed) in[static_cast<std::size_t>(v)] = 1;
  bool grew = true;
  while (grew && !seed.empty()) {
    grew = false;
    for (Vertex z = 0; z < g.order(); ++z) {
      if (in[static_cast<std::size_t>(z)]) continue;
      bool first = g.has_edge(z, seed.front());
      for (std::size_t i = 1; i < seed.size(); ++i) {
        if (g.has_edge(z, seed[i]) != first) {
          in[static_cast<std::size_t>(z)] = 1;
          seed.push_back(z);
          grew = true;
          break;
        }
      }
    }
  }
  std::sort(seed.begin(), seed.end());
  return seed;
}

namespace {

bool is_module(const Graph& g, const std::vector<Vertex>& cls, const std::vector<char>& member) {
  for (Vertex z = 0; z < g.order(); ++z) {
    if (member[static_cast<std::size_t>(z)]) continue;
    bool first = g.has_edge(z, cls.front());
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (g.has_edge(z, cls[i]) != first) return false;
  }
  return true;
}

class FactorSearch {
 public:
  FactorSearch(const Graph& g, const LexSearchOptions& opts) : g_(g), opts_(opts) {}

  std::vector<LexFactorization> run() {
    const int n = g_.order();
    for (int size = 2; size * 2 <= n; ++size) {
      if (n % size) continue;
      class_size_ = size;
      assigned_.assign(static_cast<std::size_t>(n), 0);
      partition_.clear();
      next_class();
      if (done()) break;
    }
    return std::move(found_);
  }

 private:
  bool done() const { return opts_.first_only && !found_.empty(); }

  void next_class() {
    if (done()) return;
    Vertex root = -1;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!assigned_[static_cast<std::size_t>(v)]) {
        root = v;
        break;
      }
    if (root < 0) {
      emit();
      return;
    }
    std::vector<Vertex> cls{root};
    assigned_[static_cast<std::size_t>(root)] = 1;
    grow(cls);
    assigned_[static_cast<std::size_t>(root)] = 0;
  }

  // Extends `cls` with unassigned vertices larger than its last element.
  void grow(std::vector<Vertex>& cls) {
    if (done()) return;
    if (static_cast<int>(cls.size()) == class_size_) {
      std::vector<char> member(static_cast<std::size_t>(g_.order()), 0);
      for (Vertex v : cls) member[static_cast<std::size_t>(v)] = 1;
      if (!is_module(g_, cls, member)) return;
      partition_.push_back(cls);
      next_class();
      partition_.pop_back();
      return;
    }
    if (opts_.prune && cls.size() >= 2 && !closure_feasible(cls)) return;
    for (Vertex w = cls.back() + 1; w < g_.order(); ++w) {
      if (assigned_[static_cast<std::size_t>(w)]) continue;
      if (g_.order() - w < class_size_ - static_cast<int>(cls.size())) break;
      cls.push_back(w);
      assigned_[static_cast<std::size_t>(w)] = 1;
      grow(cls);
      assigned_[static_cast<std::size_t>(w)] = 0;
      cls.pop_back();
      if (done()) return;
    }
  }

  // The final class contains the module closure of the partial class, so
  // the closure must fit, avoid assigned vertices, and only need vertices the
  // increasing-order search can still add.
  bool closure_feasible(const std::vector<Vertex>& cls) const {
    auto closure = module_closure(g_, cls);
    if (static_cast<int>(closure.size()) > class_size_) return false;
    std::vector<char> in(static_cast<std::size_t>(g_.order()), 0);
    for (Vertex v : cls) in[static_cast<std::size_t>(v)] = 1;
    for (Vertex z : closure) {
      if (in[static_cast<std::size_t>(z)]) continue;
      if (z < cls.back()) return false;
      if (assigned_[static_cast<std::size_t>(z)]) return false;
    }
    return true;
  }

  void emit() {
    const int nl = static_cast<int>(partition_.size());
    // All classes must induce isomorphic graphs.
    Graph right = induced_subgraph(g_, partition_.front());
    auto right_canon = canonize(right);
    std::vector<std::vector<Vertex>> isos;
    for (const auto& cls : partition_) {
      Graph c = induced_subgraph(g_, cls);
      auto cc = canonize(c);
      if (cc.form != right_canon.form) return;
      // Map class vertex k -> right-factor vertex with the same canonical label.
      std::vector<int> inv_right(static_cast<std::size_t>(right.order()));
      for (Vertex v = 0; v < right.order(); ++v) inv_right[static_cast<std::size_t>(right_canon.labeling[static_cast<std::size_t>(v)])] = v;
      std::vector<Vertex> iso;
      for (std::size_t k = 0; k < cls.size(); ++k) iso.push_back(inv_right[static_cast<std::size_t>(cc.labeling[k])]);
      isos.push_back(std::move(iso));
    }
    std::vector<Edge> left_edges;
    for (int a = 0; a < nl; ++a)
      for (int b = a + 1; b < nl; ++b)
        if (g_.has_edge(partition_[static_cast<std::size_t>(a)].front(), partition_[static_cast<std::size_t>(b)].front())) left_edges.emplace_back(a, b);
    LexFactorization f{Graph::from_edges(nl, left_edges), right, partition_, std::move(isos)};
    if (!check_factorization(g_, f).empty()) return;
    if (!is_isomorphic(lex_product(f.left, f.right), g_)) return;

    // Partitions related by an automorphism of g are the same factorization.
    const int n = g_.order();
    std::vector<Edge> marked = g_.edges();
    for (int a = 0; a < nl; ++a)
      for (Vertex v : partition_[static_cast<std::size_t>(a)]) marked.emplace_back(v, n + a);
    Coloring colors(static_cast<std::size_t>(n + nl), 0);
    for (int a = 0; a < nl; ++a) colors[static_cast<std::size_t>(n + a)] = 1;
    auto key = canonical_form(Graph::from_edges(n + nl, marked), colors);
    if (!seen_.insert(std::move(key)).second) return;
    found_.push_back(std::move(f));
  }

  const Graph& g_;
  LexSearchOptions opts_;
  int class_size_ = 0;
  std::vector<char> assigned_;
  std::vector<std::vector<Vertex>> partition_;
  std::set<CanonicalForm> seen_;
  std::vector<LexFactorization> found_;
};

}  // namespace

std::vector<LexFactorization> lex_factorizations(const Graph& g, const LexSearchOptions& opts) {
  if (g.order() < 4) return {};
  return FactorSearch(g, opts).run();
}

bool is_reducible(const Graph& g) {
  LexSearchOptions opts;
  opts.first_only = true;
  return !lex_factorizations(g, opts).empty();
}

}  // namespace oneplanar
