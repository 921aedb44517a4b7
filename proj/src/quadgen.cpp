#include "oneplanar/quadgen.hpp"

#include <algorithm>
#include <map>

#include "oneplanar/planarity.hpp"

namespace oneplanar {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

int index_of(const std::vector<Vertex>& r, Vertex u) {
  return static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
}

}  // namespace

std::string quadrangulation_problem(const PlaneEmbedding& emb) {
  if (auto p = emb.check(); !p.empty()) return p;
  Graph g = emb.graph();
  const int n = g.order();
  if (n < 4) return "fewer than 4 vertices";
  if (g.size() != 2 * static_cast<std::size_t>(n) - 4) return "m=" + std::to_string(g.size()) + " differs from 2n-4";
  auto faces = emb.faces();
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (faces[f].size() != 4) return "face " + std::to_string(f) + " has length " + std::to_string(faces[f].size());
  if (!is_bipartite(g)) return "not bipartite";
  if (auto pair = find_separation_pair(g)) {
    return "separation pair {" + std::to_string(pair->first) + "," + std::to_string(pair->second) + "}";
  }
  if (!is_three_connected(g)) return "not 3-connected";
  return {};
}

Quadrangulation make_quadrangulation(PlaneEmbedding emb) {
  if (auto p = quadrangulation_problem(emb); !p.empty()) throw GraphError("not a 3-connected quadrangulation: " + p);
  Quadrangulation q;
  q.graph_ = emb.graph();
  q.embedding_ = std::move(emb);
  return q;
}

Quadrangulation pseudo_double_wheel(int k) {
  if (k < 3) throw GraphError("pseudo_double_wheel: k must be at least 3");
  const int len = 2 * k, north = len, south = len + 1;
  std::vector<std::vector<Vertex>> rot(ix(len + 2));
  for (int i = 0; i < len; ++i) {
    const int next = (i + 1) % len, prev = (i + len - 1) % len;
    rot[ix(i)] = i % 2 == 0 ? std::vector<Vertex>{next, north, prev} : std::vector<Vertex>{next, prev, south};
  }
  for (int i = 0; i < len; i += 2) rot[ix(north)].push_back(i);
  for (int i = len - 1; i > 0; i -= 2) rot[ix(south)].push_back(i);
  PlaneEmbedding emb(std::move(rot));
  if (!quadrangulation_problem(emb).empty()) emb = emb.mirrored();
  return make_quadrangulation(std::move(emb));
}

namespace {

// v keeps r_i..r_j, the new vertex takes r_j..r_i; both stay adjacent to r_i
// and r_j and the quadrilateral v r_j v' r_i appears between them.
std::optional<PlaneEmbedding> split_vertex(const PlaneEmbedding& q, Vertex v, int i, int j) {
  const auto& r = q.rotation(v);
  const int d = static_cast<int>(r.size());
  const int keep = (j - i + d) % d + 1, give = (i - j + d) % d + 1;
  if (keep < 3 || give < 3) return std::nullopt;
  auto rot = q.rotations();
  const Vertex w = q.order();
  rot.emplace_back();
  std::vector<Vertex> mine, theirs;
  for (int k = 0; k < keep; ++k) mine.push_back(r[ix((i + k) % d)]);
  for (int k = 0; k < give; ++k) theirs.push_back(r[ix((j + k) % d)]);
  const Vertex ri = r[ix(i)], rj = r[ix(j)];
  for (std::size_t k = 1; k + 1 < theirs.size(); ++k) {
    auto& x = rot[ix(theirs[k])];
    x[ix(index_of(x, v))] = w;
  }
  {
    auto& x = rot[ix(ri)];
    x.insert(x.begin() + index_of(x, v) + 1, w);
  }
  {
    auto& x = rot[ix(rj)];
    x.insert(x.begin() + index_of(x, v), w);
  }
  rot[ix(v)] = std::move(mine);
  rot[ix(w)] = std::move(theirs);
  return PlaneEmbedding(std::move(rot));
}

// A new 4-cycle w0..w3 inside face (v0 v1 v2 v3) with w_i joined to v_i.
std::vector<PlaneEmbedding> insert_cycle(const PlaneEmbedding& q, const std::vector<Vertex>& face) {
  std::vector<PlaneEmbedding> out;
  const Vertex base = q.order();
  for (int orient = 0; orient < 2; ++orient) {
    auto rot = q.rotations();
    rot.resize(ix(base + 4));
    for (int i = 0; i < 4; ++i) {
      const Vertex v = face[ix(i)], prev = face[ix((i + 3) % 4)];
      auto& x = rot[ix(v)];
      x.insert(x.begin() + index_of(x, prev) + 1, base + i);
      const Vertex next_w = base + (i + 1) % 4, prev_w = base + (i + 3) % 4;
      rot[ix(base + i)] = orient ? std::vector<Vertex>{v, next_w, prev_w} : std::vector<Vertex>{v, prev_w, next_w};
    }
    out.emplace_back(std::move(rot));
  }
  return out;
}

struct Level {
  std::map<CanonicalForm, Quadrangulation> items;
};

void offer(std::map<int, Level>& levels, PlaneEmbedding emb, int n_max, QuadgenStats& stats) {
  const int n = emb.order();
  if (n > n_max) return;
  ++stats.generated;
  if (!quadrangulation_problem(emb).empty()) {
    ++stats.rejected_invalid;
    return;
  }
  Quadrangulation q = make_quadrangulation(std::move(emb));
  auto key = canonical_form(q.graph());
  if (!levels[n].items.try_emplace(std::move(key), std::move(q)).second) ++stats.duplicates;
}

}  // namespace

std::vector<Quadrangulation> enumerate_quadrangulations(int n, QuadgenStats* stats_out) {
  QuadgenStats stats;
  std::vector<Quadrangulation> result;
  if (n >= 8) {
    std::map<int, Level> levels;
    for (int k = 3; 2 * k + 2 <= n; ++k) {
      Quadrangulation seed = pseudo_double_wheel(k);
      levels[seed.order()].items.try_emplace(canonical_form(seed.graph()), seed);
    }
    for (int size = 8; size < n; ++size) {
      auto it = levels.find(size);
      if (it == levels.end()) continue;
      for (const auto& [key, q] : it->second.items) {
        const auto& emb = q.embedding();
        for (Vertex v = 0; v < emb.order(); ++v) {
          const int d = static_cast<int>(emb.rotation(v).size());
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              if (i != j)
                if (auto s = split_vertex(emb, v, i, j)) offer(levels, std::move(*s), n, stats);
        }
        if (size + 4 <= n)
          for (const auto& face : emb.faces())
            for (auto& e : insert_cycle(emb, face)) offer(levels, std::move(e), n, stats);
      }
      levels.erase(it);
    }
    if (auto it = levels.find(n); it != levels.end())
      for (auto& [key, q] : it->second.items) result.push_back(std::move(q));
  }
  if (stats_out) *stats_out = stats;
  return result;
}

namespace {

// Rows of the biadjacency matrix as neighbor masks over side B, in
// non-decreasing order; each row and each column has at least 3 ones.
class BipartiteSearch {
 public:
  BipartiteSearch(int a, int b, int edges) : a_(a), b_(b), edges_(edges) {
    for (unsigned s = 0; s < (1u << b); ++s)
      if (__builtin_popcount(s) >= 3) rows_.push_back(s);
  }

  template <class Visit>
  void run(Visit&& visit) {
    chosen_.clear();
    extend(0, 0, visit);
  }

 private:
  template <class Visit>
  void extend(std::size_t from, int used, Visit& visit) {
    const int left = a_ - static_cast<int>(chosen_.size());
    if (left == 0) {
      if (used != edges_) return;
      for (int c = 0; c < b_; ++c) {
        int deg = 0;
        for (unsigned row : chosen_) deg += row >> c & 1;
        if (deg < 3) return;
      }
      visit(chosen_);
      return;
    }
    if (used + 3 * left > edges_ || used + b_ * left < edges_) return;
    for (std::size_t i = from; i < rows_.size(); ++i) {
      chosen_.push_back(rows_[i]);
      extend(i, used + __builtin_popcount(rows_[i]), visit);
      chosen_.pop_back();
    }
  }

  int a_, b_, edges_;
  std::vector<unsigned> rows_;
  std::vector<unsigned> chosen_;
};

}  // namespace

std::vector<Quadrangulation> oracle_quadrangulations(int n, int ceiling) {
  if (n > ceiling) throw GraphError("oracle_quadrangulations: n=" + std::to_string(n) + " above the ceiling " + std::to_string(ceiling));
  std::map<CanonicalForm, Quadrangulation> found;
  const int m = 2 * n - 4;
  // Degrees are at least 3 on both sides, so each side has at most m/3 vertices.
  for (int a = 1; 2 * a <= n; ++a) {
    const int b = n - a;
    if (3 * a > m || 3 * b > m) continue;
    BipartiteSearch search(a, b, m);
    search.run([&](const std::vector<unsigned>& rows) {
      std::vector<Edge> e;
      for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c)
          if (rows[ix(r)] >> c & 1) e.emplace_back(r, a + c);
      Graph g = Graph::from_edges(n, e);
      if (!is_three_connected(g)) return;
      auto emb = planar_embedding(g);
      if (!emb) return;
      for (const auto& f : emb->faces())
        if (f.size() != 4) return;
      auto key = canonical_form(g);
      if (found.count(key)) return;
      found.emplace(std::move(key), make_quadrangulation(std::move(*emb)));
    });
  }
  std::vector<Quadrangulation> out;
  for (auto& [key, q] : found) out.push_back(std::move(q));
  return out;
}

Augmentation augment_to_optimal(const Quadrangulation& q) {
  Augmentation out;
  try {
    out.drawing = fill_faces_with_crossings(q.embedding(), q.faces());
  } catch (const GraphError& e) {
    out.rejection = std::string("multi-edge: ") + e.what();
  }
  return out;
}

}  // namespace oneplanar
