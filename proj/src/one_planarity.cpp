#include "oneplanar/one_planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <sstream>

#include "oneplanar/bounds.hpp"
#include "oneplanar/planarity.hpp"

namespace oneplanar {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint32_t;

constexpr int kMaxReal = 24;
constexpr int kMaxVertices = 64;
constexpr int kMaxDegree = 24;
constexpr int kMaxCorners = kMaxVertices * 8;
constexpr int kMaxFaces = 2 * kMaxCorners;

std::size_t ix(int v) { return static_cast<std::size_t>(v); }
Mask bit(int v) { return Mask{1} << v; }

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& b) : budget_(b), start_(Clock::now()) {}

  // Counts one node; false once a limit is hit.
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_seconds > 0 && (nodes_ & 255) == 0 && elapsed() > budget_.max_seconds) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  SearchStats stats() const { return SearchStats{nodes_, elapsed()}; }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Partial drawing: rotations of the planarization over real vertices 0..n-1
// and dummies n, n+1, ...
struct Map {
  std::array<std::array<std::int8_t, kMaxDegree>, kMaxVertices> rot;
  std::array<std::int8_t, kMaxVertices> deg{};
  std::array<std::array<std::int8_t, 4>, kMaxVertices> crossing{};  // per dummy index: p q x y
  Mask placed = 0;
  int dummies = 0;
  int components = 0;
  int edges = 0;

  int at(int v, int i) const { return rot[ix(v)][ix(i)]; }
  int find(int v, int u) const {
    for (int i = 0; i < deg[ix(v)]; ++i)
      if (at(v, i) == u) return i;
    return -1;
  }
  // Puts u right after position i of v's rotation (i = -1 on an empty rotation).
  void insert_after(int v, int i, int u) {
    auto& r = rot[ix(v)];
    for (int k = deg[ix(v)]; k > i + 1; --k) r[ix(k)] = r[ix(k - 1)];
    r[ix(i + 1)] = static_cast<std::int8_t>(u);
    ++deg[ix(v)];
  }
  void replace(int v, int old, int now) {
    for (int k = 0; k < deg[ix(v)]; ++k)
      if (at(v, k) == old) rot[ix(v)][ix(k)] = static_cast<std::int8_t>(now);
  }
};

struct Faces {
  std::array<int, kMaxVertices> base{};
  std::array<std::int16_t, kMaxCorners> of{};
  std::array<Mask, kMaxFaces> real{};
  std::array<Mask, kMaxFaces> reach{};
  int count = 0;

  int face(int v, int i) const { return of[ix(base[ix(v)] + i)]; }
};

// Corner (v, i) sits between rot[v][i] and rot[v][i+1] and belongs to the
// face of the dart rot[v][i] -> v.
void trace(const Map& m, int n, Faces& f) {
  int total = 0;
  const int nv = n + m.dummies;
  for (int v = 0; v < nv; ++v) {
    f.base[ix(v)] = total;
    total += m.deg[ix(v)];
  }
  std::fill(f.of.begin(), f.of.begin() + total, std::int16_t{-1});
  f.count = 0;
  for (int v = 0; v < nv; ++v) {
    if (v < n && !(m.placed & bit(v))) continue;
    if (m.deg[ix(v)] == 0) {
      f.real[ix(f.count)] = bit(v);
      ++f.count;
      continue;
    }
    for (int i = 0; i < m.deg[ix(v)]; ++i) {
      if (f.of[ix(f.base[ix(v)] + i)] >= 0) continue;
      const auto id = static_cast<std::int16_t>(f.count++);
      Mask real = 0;
      int x = v, xi = i;
      while (f.of[ix(f.base[ix(x)] + xi)] < 0) {
        f.of[ix(f.base[ix(x)] + xi)] = id;
        if (x < n) real |= bit(x);
        const int y = m.at(x, (xi + 1) % m.deg[ix(x)]);
        xi = m.find(y, x);
        x = y;
      }
      f.real[ix(id)] = real;
    }
  }
  for (int k = 0; k < f.count; ++k) f.reach[ix(k)] = f.real[ix(k)];
  for (int a = 0; a < n; ++a) {
    if (!(m.placed & bit(a))) continue;
    for (int i = 0; i < m.deg[ix(a)]; ++i) {
      const int b = m.at(a, i);
      if (b >= n || b < a) continue;
      const int ab = f.face(b, m.find(b, a));
      const int ba = f.face(a, i);
      const Mask keep = ~(bit(a) | bit(b));
      f.reach[ix(ab)] |= f.real[ix(ba)] & keep;
      f.reach[ix(ba)] |= f.real[ix(ab)] & keep;
    }
  }
}

bool euler_ok(const Map& m, const Faces& f) {
  const int v = std::popcount(m.placed) + m.dummies;
  return v - m.edges + f.count == 2 * m.components;
}

struct Option {
  int xi = -1;  // corner of x, -1 while x is isolated
  int yj = -1;  // corner of y, -1 while y is isolated
  int p = -1;   // crossed edge p-q, x on the side of dart p->q
  int q = -1;
};

class Engine {
 public:
  enum class Mode { Decide, Enumerate };

  Engine(const Graph& g, Mode mode, const SearchBudget& budget) : g_(g), n_(g.order()), mode_(mode), clock_(budget) {
    order_vertices();
  }

  void run() {
    Map m{};
    Faces f{};
    trace(m, n_, f);
    dfs(m, f, 0, 0);
  }

  bool found() const { return found_; }
  bool exhausted() const { return clock_.exhausted(); }
  SearchStats stats() const { return clock_.stats(); }
  const OnePlaneDrawing& witness() const { return *witness_; }
  std::map<std::vector<int>, OnePlaneDrawing>& catalog() { return catalog_; }
  std::uint64_t labeled() const { return labeled_; }

 private:
  void order_vertices() {
    nbr_.assign(ix(n_), 0);
    for (const Edge& e : g_.edges()) {
      nbr_[ix(e.u)] |= bit(e.v);
      nbr_[ix(e.v)] |= bit(e.u);
    }
    Mask placed = 0;
    std::vector<int> position(ix(n_), -1);
    for (int k = 0; k < n_; ++k) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed & bit(v)) continue;
        const int links = std::popcount(nbr_[ix(v)] & placed);
        const int d = g_.degree(v);
        if (links > best_links || (links == best_links && d > best_deg)) {
          best = v;
          best_links = links;
          best_deg = d;
        }
      }
      position[ix(best)] = k;
      placed |= bit(best);
      order_.push_back(best);
      std::vector<int> earlier;
      for (int w : g_.neighbors(best))
        if (position[ix(w)] >= 0 && w != best) earlier.push_back(w);
      std::sort(earlier.begin(), earlier.end(), [&](int a, int b) { return position[ix(a)] < position[ix(b)]; });
      batch_.push_back(std::move(earlier));
    }
  }

  bool stop() const { return clock_.exhausted() || (mode_ == Mode::Decide && found_); }

  // Every future edge must still be drawable. Faces only shrink as the drawing
  // grows, so an edge that cannot reach its endpoint now never will.
  bool lookahead(const Map& m, const Faces& f, std::size_t k, std::size_t t) const {
    const int x = order_[k];
    Mask pending = 0;
    for (std::size_t i = t; i < batch_[k].size(); ++i) pending |= bit(batch_[k][i]);
    if (pending && m.deg[ix(x)] > 0) {
      Mask reach = 0;
      for (int i = 0; i < m.deg[ix(x)]; ++i) reach |= f.reach[ix(f.face(x, i))];
      if (pending & ~reach) return false;
    }
    for (std::size_t j = k + 1; j < order_.size(); ++j) {
      const Mask need = nbr_[ix(order_[j])] & m.placed;
      if (!need) continue;
      bool ok = false;
      for (int fi = 0; fi < f.count && !ok; ++fi) ok = (need & ~f.reach[ix(fi)]) == 0;
      if (!ok) return false;
    }
    return true;
  }

  void options(const Map& m, const Faces& f, int x, int y, std::vector<Option>& out) const {
    const int dx = m.deg[ix(x)], dy = m.deg[ix(y)];
    if (dx == 0) {
      if (dy == 0) out.push_back(Option{});
      for (int j = 0; j < dy; ++j) out.push_back(Option{-1, j, -1, -1});
    } else {
      for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dy; ++j)
          if (f.face(x, i) == f.face(y, j)) out.push_back(Option{i, j, -1, -1});
    }
    if (dy == 0) return;
    for (int a = 0; a < n_; ++a) {
      if (a == x || a == y || !(m.placed & bit(a))) continue;
      for (int i = 0; i < m.deg[ix(a)]; ++i) {
        const int b = m.at(a, i);
        if (b >= n_ || b < a || b == x || b == y) continue;
        const int ab = f.face(b, m.find(b, a));
        const int ba = f.face(a, i);
        for (int side = 0; side < 2; ++side) {
          const int p = side ? b : a, q = side ? a : b;
          const int fx = side ? ba : ab, fy = side ? ab : ba;
          for (int j = 0; j < dy; ++j) {
            if (f.face(y, j) != fy) continue;
            if (dx == 0) {
              out.push_back(Option{-1, j, p, q});
            } else {
              for (int xi = 0; xi < dx; ++xi)
                if (f.face(x, xi) == fx) out.push_back(Option{xi, j, p, q});
            }
          }
        }
      }
    }
  }

  void apply(Map& m, int x, int y, const Option& o) const {
    m.placed |= bit(x);
    if (o.p < 0) {
      m.insert_after(x, o.xi, y);
      m.insert_after(y, o.yj, x);
      m.edges += 1;
      return;
    }
    const int c = n_ + m.dummies;
    m.replace(o.p, o.q, c);
    m.replace(o.q, o.p, c);
    m.deg[ix(c)] = 4;
    m.rot[ix(c)][0] = static_cast<std::int8_t>(o.p);
    m.rot[ix(c)][1] = static_cast<std::int8_t>(x);
    m.rot[ix(c)][2] = static_cast<std::int8_t>(o.q);
    m.rot[ix(c)][3] = static_cast<std::int8_t>(y);
    m.insert_after(x, o.xi, c);
    m.insert_after(y, o.yj, c);
    m.crossing[ix(m.dummies)] = {static_cast<std::int8_t>(o.p), static_cast<std::int8_t>(o.q), static_cast<std::int8_t>(x),
                                 static_cast<std::int8_t>(y)};
    ++m.dummies;
    m.edges += 3;  // p-q becomes p-c, c-q; plus x-c, c-y
  }

  void dfs(const Map& m, const Faces& f, std::size_t k, std::size_t t) {
    if (stop()) return;
    if (k == order_.size()) {
      leaf(m);
      return;
    }
    const int x = order_[k];
    const auto& batch = batch_[k];
    if (batch.empty()) {
      Map c = m;
      c.placed |= bit(x);
      ++c.components;
      Faces fc{};
      trace(c, n_, fc);
      if (lookahead(c, fc, k, 0)) dfs(c, fc, k + 1, 0);
      return;
    }
    if (t == batch.size()) {
      dfs(m, f, k + 1, 0);
      return;
    }
    if (!clock_.tick()) return;
    const int y = batch[t];
    std::vector<Option> opts;
    options(m, f, x, y, opts);
    for (const Option& o : opts) {
      Map c = m;
      apply(c, x, y, o);
      Faces fc{};
      trace(c, n_, fc);
      if (!euler_ok(c, fc)) continue;
      if (!lookahead(c, fc, k, t + 1)) continue;
      dfs(c, fc, k, t + 1);
      if (stop()) return;
    }
  }

  OnePlaneDrawing to_drawing(const Map& m) const {
    std::vector<std::vector<Vertex>> rot(ix(n_ + m.dummies));
    for (int v = 0; v < n_ + m.dummies; ++v)
      for (int i = 0; i < m.deg[ix(v)]; ++i) rot[ix(v)].push_back(m.at(v, i));
    std::vector<Crossing> crossings;
    for (int d = 0; d < m.dummies; ++d) {
      const auto& c = m.crossing[ix(d)];
      crossings.push_back(Crossing{Edge(c[0], c[1]), Edge(c[2], c[3])});
    }
    return OnePlaneDrawing{g_, std::move(crossings), PlaneEmbedding(std::move(rot))};
  }

  void leaf(const Map& m) {
    ++labeled_;
    if (mode_ == Mode::Decide) {
      found_ = true;
      witness_ = to_drawing(m);
      return;
    }
    OnePlaneDrawing d = to_drawing(m);
    auto code = drawing_code(d);
    catalog_.try_emplace(std::move(code), std::move(d));
  }

  const Graph& g_;
  const int n_;
  Mode mode_;
  BudgetClock clock_;
  std::vector<int> order_;
  std::vector<std::vector<int>> batch_;
  std::vector<Mask> nbr_;
  bool found_ = false;
  std::optional<OnePlaneDrawing> witness_;
  std::map<std::vector<int>, OnePlaneDrawing> catalog_;
  std::uint64_t labeled_ = 0;
};

std::string bound_text(int n) {
  if (n <= 6) return "C(n,2)=" + std::to_string(max_edges_1planar(n));
  if (n == 7 || n == 9) return "4n-9=" + std::to_string(max_edges_1planar(n));
  return "4n-8=" + std::to_string(max_edges_1planar(n));
}

std::optional<std::string> engine_limit(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (n > static_cast<std::size_t>(kMaxReal)) return "n=" + std::to_string(n) + " exceeds the search limit " + std::to_string(kMaxReal);
  if (n + g.size() / 2 > static_cast<std::size_t>(kMaxVertices)) return "planarization could exceed " + std::to_string(kMaxVertices) + " vertices";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > kMaxDegree) return "degree above " + std::to_string(kMaxDegree);
  return std::nullopt;
}

}  // namespace

OnePlanarVerdict is_one_planar(const Graph& g, const SearchBudget& budget) {
  OnePlanarVerdict out;
  const int n = g.order();
  const auto m = static_cast<std::int64_t>(g.size());
  if (n >= 3 && m > max_edges_1planar(n)) {
    out.status = Verdict::No;
    out.reason = "m=" + std::to_string(m) + " exceeds " + bound_text(n);
    return out;
  }
  if (n < 3 || m <= 3LL * n - 6) {
    if (auto emb = planar_embedding(g)) {
      out.status = Verdict::Yes;
      out.witness = plane_drawing(*emb);
      out.reason = "planar";
      return out;
    }
  }
  if (auto limit = engine_limit(g)) {
    out.status = Verdict::Unknown;
    out.reason = *limit;
    return out;
  }
  Engine engine(g, Engine::Mode::Decide, budget);
  engine.run();
  out.stats = engine.stats();
  if (engine.found()) {
    out.status = Verdict::Yes;
    out.witness = engine.witness();
    out.reason = std::to_string(out.witness->crossing_count()) + (out.witness->crossing_count() == 1 ? " crossing" : " crossings");
  } else if (engine.exhausted()) {
    out.status = Verdict::Unknown;
    out.reason = "budget exhausted after " + std::to_string(out.stats.nodes) + " nodes";
  } else {
    out.status = Verdict::No;
    out.reason = "search space exhausted (" + std::to_string(out.stats.nodes) + " nodes)";
  }
  return out;
}

DrawingCatalog enumerate_drawings(const Graph& g, const EnumerationLimits& limits) {
  if (g.order() > limits.max_n || g.size() > limits.max_m) {
    throw LimitError("enumerate_drawings: n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) +
                     " exceeds the ceiling n<=" + std::to_string(limits.max_n) + ", m<=" + std::to_string(limits.max_m));
  }
  if (!is_connected(g)) throw LimitError("enumerate_drawings: graph is disconnected");
  if (auto limit = engine_limit(g)) throw LimitError("enumerate_drawings: " + *limit);
  DrawingCatalog out;
  if (g.order() <= 1) {
    out.drawings.push_back(plane_drawing(PlaneEmbedding(std::vector<std::vector<Vertex>>(static_cast<std::size_t>(g.order())))));
    out.labeled_drawings = 1;
    return out;
  }
  Engine engine(g, Engine::Mode::Enumerate, limits.budget);
  engine.run();
  out.complete = !engine.exhausted();
  out.stats = engine.stats();
  out.labeled_drawings = engine.labeled();
  for (auto& [code, d] : engine.catalog()) out.drawings.push_back(std::move(d));
  return out;
}

// --- crossing-set oracle -------------------------------------------------------

namespace {

class CrossingSetSearch {
 public:
  CrossingSetSearch(const Graph& g, const SearchBudget& budget) : g_(g), clock_(budget) {
    edges_ = g.edges();
    // Dense edges first so that non-planar partial states appear early.
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& x, const Edge& y) {
      return g.degree(x.u) + g.degree(x.v) > g.degree(y.u) + g.degree(y.v);
    });
  }

  // Edges are decided in order: uncrossed, or paired with a later disjoint
  // edge. Every partial planarization must stay planar.
  // At most cap crossings.
  bool search(std::size_t cap) {
    state_.assign(edges_.size(), kOpen);
    chosen_.clear();
    uncrossed_ = 0;
    cap_ = cap;
    return extend(0);
  }

  bool exhausted() const { return clock_.exhausted(); }
  SearchStats stats() const { return clock_.stats(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& chosen() const { return chosen_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  enum : char { kOpen, kPlain, kCrossed };

  bool extend(std::size_t i) {
    while (i < edges_.size() && state_[i] != kOpen) ++i;
    if (!clock_.tick()) return false;
    if (i == edges_.size()) return true;
    const std::int64_t plane_limit = 3LL * g_.order() - 6;

    // Dropping one edge per crossing leaves a plane graph.
    if (g_.order() >= 3 && static_cast<std::int64_t>(uncrossed_ + 1 + chosen_.size()) > plane_limit) return false;
    {
      state_[i] = kPlain;
      ++uncrossed_;
      if (planarizes() && extend(i + 1)) return true;
      --uncrossed_;
      state_[i] = kOpen;
      if (clock_.exhausted()) return false;
    }
    if (chosen_.size() < cap_) {
      for (std::size_t j = i + 1; j < edges_.size(); ++j) {
        if (state_[j] != kOpen || edges_[i].shares_endpoint(edges_[j])) continue;
        state_[i] = state_[j] = kCrossed;
        chosen_.emplace_back(i, j);
        if (planarizes() && extend(i + 1)) return true;
        chosen_.pop_back();
        state_[i] = state_[j] = kOpen;
        if (clock_.exhausted()) return false;
      }
    }
    return false;
  }

  // Uncrossed edges decided so far plus one wheel per chosen crossing: hub h
  // and rim p0 p1 p2 p3, the first edge attached to p0 and p2, the second to
  // p1 and p3.
  bool planarizes() const {
    const int n = g_.order();
    std::vector<Edge> e;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (state_[i] == kPlain) e.push_back(edges_[i]);
    int next = n;
    for (auto [a, b] : chosen_) {
      const int h = next, p = next + 1;
      next += 5;
      for (int r = 0; r < 4; ++r) {
        e.emplace_back(h, p + r);
        e.emplace_back(p + r, p + (r + 1) % 4);
      }
      e.emplace_back(edges_[a].u, p);
      e.emplace_back(edges_[a].v, p + 2);
      e.emplace_back(edges_[b].u, p + 1);
      e.emplace_back(edges_[b].v, p + 3);
    }
    return is_planar(Graph::from_edges(next, e));
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<char> state_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::size_t uncrossed_ = 0;
  std::size_t cap_ = 0;
  BudgetClock clock_;
};

}  // namespace

OnePlanarVerdict crossing_set_one_planar(const Graph& g, const SearchBudget& budget) {
  OnePlanarVerdict out;
  CrossingSetSearch search(g, budget);
  if (search.search(g.size() / 2)) {
    auto best = search.chosen();
    // Smallest crossing count, counting up from the excess over 3n-6.
    const auto excess = static_cast<std::int64_t>(g.size()) - 3LL * g.order() + 6;
    for (auto k = static_cast<std::size_t>(std::max<std::int64_t>(0, excess)); k < best.size(); ++k) {
      if (search.search(k)) {
        best = search.chosen();
        break;
      }
      if (search.exhausted()) break;
    }
    out.status = Verdict::Yes;
    std::ostringstream os;
    os << best.size() << (best.size() == 1 ? " crossing:" : " crossings:");
    for (auto [i, j] : best) {
      const Edge& e = search.edges()[i];
      const Edge& f = search.edges()[j];
      os << ' ' << e.u << '-' << e.v << 'x' << f.u << '-' << f.v;
    }
    out.reason = os.str();
    out.stats = search.stats();
    return out;
  }
  if (search.exhausted()) {
    out.status = Verdict::Unknown;
    out.reason = "budget exhausted after " + std::to_string(search.stats().nodes) + " nodes";
    out.stats = search.stats();
    return out;
  }
  out.status = Verdict::No;
  out.reason = "no crossing set planarizes";
  out.stats = search.stats();
  return out;
}

}  // namespace oneplanar
