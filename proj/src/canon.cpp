#include "oneplanar/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace oneplanar {

std::string CanonicalForm::key() const {
  std::string k = emit_graph6(Graph::from_edges(n, edges));
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c != 0; })) {
    k += ':';
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (i) k += ',';
      k += std::to_string(colors[i]);
    }
  }
  return k;
}

namespace {

using Bits = std::vector<std::uint64_t>;

class Canonizer {
 public:
  Canonizer(const Graph& g, const Coloring& coloring) : g_(g), n_(g.order()) {
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    adj_.assign(static_cast<std::size_t>(n_), Bits(words_, 0));
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) set_bit(adj_[static_cast<std::size_t>(v)], w);
    base_colors_ = coloring.empty() ? std::vector<int>(static_cast<std::size_t>(n_), 0) : coloring;
    if (static_cast<int>(base_colors_.size()) != n_) throw GraphError("coloring size mismatch");
  }

  Canonization run() {
    std::vector<int> color = rank(base_colors_);
    refine(color);
    std::vector<Vertex> prefix;
    search(color, prefix);
    Canonization out;
    out.labeling = best_lab_;
    out.form.n = n_;
    out.form.colors.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) out.form.colors[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(v)])] = base_colors_[static_cast<std::size_t>(v)];
    for (const Edge& e : g_.edges())
      out.form.edges.emplace_back(best_lab_[static_cast<std::size_t>(e.u)], best_lab_[static_cast<std::size_t>(e.v)]);
    std::sort(out.form.edges.begin(), out.form.edges.end());
    return out;
  }

 private:
  static void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  bool adjacent(int a, int b) const { return (adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) >> 6] >> (b & 63)) & 1; }

  // Dense ranks of arbitrary integer labels, order preserving.
  static std::vector<int> rank(const std::vector<int>& labels) {
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), labels[i]) - sorted.begin());
    return out;
  }

  static int cell_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  // Equitable refinement: a vertex's signature is its color followed by its
  // neighbor counts per color class; cells are reordered by signature.
  void refine(std::vector<int>& color) const {
    int cells = cell_count(color);
    while (cells < n_) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(cells) + 1, 0));
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s[0] = color[static_cast<std::size_t>(v)];
        for (Vertex w : g_.neighbors(v)) ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(w)]) + 1];
      }
      std::vector<int> idx(static_cast<std::size_t>(n_));
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      std::vector<int> next(static_cast<std::size_t>(n_));
      int c = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(idx[i])] != sig[static_cast<std::size_t>(idx[i - 1])]) ++c;
        next[static_cast<std::size_t>(idx[i])] = c;
      }
      const int new_cells = c + 1;
      color = std::move(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
  }

  Bits code_of(const std::vector<int>& lab) const {
    // Row-major upper triangle of the relabeled adjacency matrix.
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])] = v;
    const std::size_t total = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
    Bits code((total + 63) / 64, 0);
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++k)
        if (adjacent(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]))
          code[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
    return code;
  }

  void record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) inv[static_cast<std::size_t>(from_lab[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(to_lab[static_cast<std::size_t>(v)])];
      identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const std::vector<int>& lab) {
    Bits code = code_of(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      return;
    }
    if (code == first_code_) {
      record_automorphism(lab, first_lab_);
    } else if (code == best_code_) {
      record_automorphism(lab, best_lab_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = lab;
    }
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Orbit representative of each vertex under the automorphisms that fix every
  // vertex of `prefix`.
  std::vector<int> orbits_fixing(const std::vector<Vertex>& prefix) {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
    return parent;
  }

  void search(const std::vector<int>& color, std::vector<Vertex>& prefix) {
    const int cells = cell_count(color);
    if (cells == n_) {
      leaf(color);
      return;
    }
    // Target: first smallest non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : color) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 && (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) target = c;

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v)
      if (color[static_cast<std::size_t>(v)] == target) members.push_back(v);

    std::vector<Vertex> explored;
    for (Vertex v : members) {
      if (!explored.empty()) {
        auto orbit = orbits_fixing(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](Vertex u) { return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)]; });
        if (equivalent) continue;
      }
      explored.push_back(v);
      std::vector<int> child = color;
      for (Vertex w = 0; w < n_; ++w) {
        int& cw = child[static_cast<std::size_t>(w)];
        if (cw > target || (cw == target && w != v)) ++cw;
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_ = 0;
  std::vector<Bits> adj_;
  std::vector<int> base_colors_;

  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_;
  Bits first_code_, best_code_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

Canonization canonize(const Graph& g, const Coloring& coloring) {
  if (g.order() == 0) return {};
  return Canonizer(g, coloring).run();
}

CanonicalForm canonical_form(const Graph& g, const Coloring& coloring) { return canonize(g, coloring).form; }

CanonicalForm brute_force_canonical_form(const Graph& g, const Coloring& coloring) {
  const int n = g.order();
  if (n > 9) throw GraphError("brute-force canonical form limited to n <= 9");
  std::vector<int> colors = coloring.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0) : coloring;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalForm> best;
  do {
    CanonicalForm f;
    f.n = n;
    f.colors.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) f.colors[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = colors[static_cast<std::size_t>(v)];
    for (const Edge& e : g.edges()) f.edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    std::sort(f.edges.begin(), f.edges.end());
    if (!best || f < *best) best = std::move(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!best) return CanonicalForm{};
  return *best;
}

bool is_isomorphic(const Graph& g, const Graph& h, const Coloring& cg, const Coloring& ch) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g, cg) == canonical_form(h, ch);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto cg = canonize(g);
  auto ch = canonize(h);
  if (cg.form != ch.form) return std::nullopt;
  std::vector<int> inv_h(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) inv_h[static_cast<std::size_t>(ch.labeling[static_cast<std::size_t>(v)])] = v;
  std::vector<int> map(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) map[static_cast<std::size_t>(v)] = inv_h[static_cast<std::size_t>(cg.labeling[static_cast<std::size_t>(v)])];
  return map;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 7) throw GraphError("nonisomorphic_graphs: n must be in 0..7");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::map<CanonicalForm, Graph> seen;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1) e.push_back(slots[k]);
    Graph g = Graph::from_edges(n, e);
    auto form = canonical_form(g);
    seen.try_emplace(std::move(form), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [form, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace oneplanar
