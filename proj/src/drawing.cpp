#include "oneplanar/drawing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace oneplanar {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

int position_of(const std::vector<Vertex>& rot, Vertex u) {
  auto it = std::find(rot.begin(), rot.end(), u);
  return it == rot.end() ? -1 : static_cast<int>(it - rot.begin());
}

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

// --- PlaneEmbedding ----------------------------------------------------------

std::size_t PlaneEmbedding::edge_count() const {
  std::size_t darts = 0;
  for (const auto& r : rotation_) darts += r.size();
  return darts / 2;
}

Vertex PlaneEmbedding::successor(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  int p = position_of(r, u);
  if (p < 0) throw GraphError("successor: " + std::to_string(u) + " is not a neighbor of " + std::to_string(v));
  return r[(static_cast<std::size_t>(p) + 1) % r.size()];
}

Graph PlaneEmbedding::graph() const {
  std::vector<Edge> e;
  for (Vertex v = 0; v < order(); ++v)
    for (Vertex w : rotation(v))
      if (v < w) e.emplace_back(v, w);
  return Graph::from_edges(order(), e);
}

std::vector<std::vector<Vertex>> PlaneEmbedding::faces() const {
  std::vector<std::vector<char>> used(rotation_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v) used[v].assign(rotation_[v].size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (rotation(v).empty()) {
      out.push_back({v});
      continue;
    }
    for (std::size_t i = 0; i < rotation(v).size(); ++i) {
      if (used[idx(v)][i]) continue;
      std::vector<Vertex> walk;
      Vertex x = v;
      std::size_t xi = i;
      while (!used[idx(x)][xi]) {
        used[idx(x)][xi] = 1;
        walk.push_back(x);
        Vertex y = rotation(x)[xi];
        int back = position_of(rotation(y), x);
        if (back < 0) throw GraphError("asymmetric rotation at " + std::to_string(y));
        xi = (static_cast<std::size_t>(back) + 1) % rotation(y).size();
        x = y;
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

std::string PlaneEmbedding::check() const {
  const int n = order();
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = rotation(v);
    std::set<Vertex> seen;
    for (Vertex w : r) {
      if (w < 0 || w >= n) return "rotation of " + std::to_string(v) + " mentions vertex " + std::to_string(w) + " out of range";
      if (w == v) return "self-loop at " + std::to_string(v);
      if (!seen.insert(w).second) return "parallel edge " + std::to_string(v) + "-" + std::to_string(w);
      if (position_of(rotation(w), v) < 0) return "rotation not symmetric on edge " + std::to_string(v) + "-" + std::to_string(w);
    }
  }
  const long long f = static_cast<long long>(faces().size());
  const long long c = component_count(graph());
  const long long euler = n - static_cast<long long>(edge_count()) + f;
  if (euler != 2 * c) {
    return "V - E + F = " + std::to_string(euler) + ", expected " + std::to_string(2 * c) + " (not spherical)";
  }
  return {};
}

PlaneEmbedding PlaneEmbedding::mirrored() const {
  auto r = rotation_;
  for (auto& x : r) std::reverse(x.begin(), x.end());
  return PlaneEmbedding(std::move(r));
}

// --- canonical map codes -----------------------------------------------------

namespace {

std::vector<int> code_from(const PlaneEmbedding& emb, const std::vector<int>& colors, Vertex root, int start, bool forward,
                           const std::vector<int>* bound) {
  const int n = emb.order();
  std::vector<int> number(idx(n), -1);
  std::vector<int> entry(idx(n), 0);  // rotation index to start from
  std::vector<Vertex> queue{root};
  number[idx(root)] = 0;
  entry[idx(root)] = start;
  int next = 1;
  std::vector<int> code;
  bool tied = bound != nullptr;
  auto push = [&](int x) -> bool {
    // Returns false once the code is known to exceed the bound.
    if (tied) {
      std::size_t k = code.size();
      if (k < bound->size()) {
        if (x > (*bound)[k]) return false;
        if (x < (*bound)[k]) tied = false;
      }
    }
    code.push_back(x);
    return true;
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex x = queue[qi];
    const auto& r = emb.rotation(x);
    const int d = static_cast<int>(r.size());
    if (!push(colors.empty() ? 0 : colors[idx(x)]) || !push(d)) return {};
    for (int k = 0; k < d; ++k) {
      int p = forward ? (entry[idx(x)] + k) % d : ((entry[idx(x)] - k) % d + d) % d;
      Vertex y = r[idx(p)];
      if (number[idx(y)] < 0) {
        number[idx(y)] = next++;
        entry[idx(y)] = position_of(emb.rotation(y), x);
        queue.push_back(y);
      }
      if (!push(number[idx(y)])) return {};
    }
  }
  return code;
}

}  // namespace

std::vector<int> embedding_code(const PlaneEmbedding& emb, const std::vector<int>& colors) {
  const int n = emb.order();
  std::vector<int> comp(idx(n), -1);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[idx(s)] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<Vertex> stack{s};
    comp[idx(s)] = c;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.back().push_back(v);
      for (Vertex w : emb.rotation(v))
        if (comp[idx(w)] < 0) {
          comp[idx(w)] = c;
          stack.push_back(w);
        }
    }
  }
  std::vector<std::vector<int>> codes;
  for (const auto& mem : members) {
    std::vector<int> best;
    bool have = false;
    for (Vertex v : mem) {
      const int d = static_cast<int>(emb.rotation(v).size());
      if (d == 0) {
        best = {colors.empty() ? 0 : colors[idx(v)], 0};
        have = true;
        continue;
      }
      for (int s = 0; s < d; ++s)
        for (bool fwd : {true, false}) {
          auto c = code_from(emb, colors, v, s, fwd, have ? &best : nullptr);
          if (c.empty()) continue;
          if (!have || c < best) {
            best = std::move(c);
            have = true;
          }
        }
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::vector<int> out{static_cast<int>(codes.size())};
  for (const auto& c : codes) {
    out.push_back(static_cast<int>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

// --- OnePlaneDrawing -----------------------------------------------------------

std::vector<Edge> OnePlaneDrawing::crossing_edges() const {
  std::vector<Edge> out;
  for (const auto& c : crossings) {
    out.push_back(c.first);
    out.push_back(c.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool OnePlaneDrawing::is_crossing_edge(Edge e) const {
  return std::any_of(crossings.begin(), crossings.end(), [&](const Crossing& c) { return c.first == e || c.second == e; });
}

std::vector<int> OnePlaneDrawing::vertex_colors() const {
  std::vector<int> c(idx(planarization.order()), 0);
  for (Vertex v = base.order(); v < planarization.order(); ++v) c[idx(v)] = 1;
  return c;
}

OnePlaneDrawing plane_drawing(const PlaneEmbedding& emb) { return OnePlaneDrawing{emb.graph(), {}, emb}; }

OnePlaneDrawing fill_faces_with_crossings(const PlaneEmbedding& skeleton, const std::vector<std::vector<Vertex>>& faces) {
  const int n = skeleton.order();
  auto rot = skeleton.rotations();
  std::vector<Crossing> crossings;
  std::map<Edge, std::size_t> diagonal_face;
  Graph sk = skeleton.graph();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f];
    if (w.size() != 4 || std::set<Vertex>(w.begin(), w.end()).size() != 4) {
      throw GraphError("face " + std::to_string(f) + " is not a 4-cycle");
    }
    for (Edge diag : {Edge(w[0], w[2]), Edge(w[1], w[3])}) {
      if (sk.has_edge(diag.u, diag.v)) {
        throw GraphError("diagonal " + edge_str(diag) + " of face " + std::to_string(f) + " duplicates a skeleton edge");
      }
      auto [it, fresh] = diagonal_face.emplace(diag, f);
      if (!fresh) {
        throw GraphError("diagonal " + edge_str(diag) + " of face " + std::to_string(f) + " duplicates the diagonal of face " +
                         std::to_string(it->second));
      }
    }
    const Vertex c = n + static_cast<Vertex>(crossings.size());
    crossings.push_back({Edge(w[0], w[2]), Edge(w[1], w[3])});
    // The corner of w[i] in this face follows w[i-1] in its rotation.
    for (int i = 0; i < 4; ++i) {
      Vertex v = w[idx(i)];
      Vertex prev = w[idx((i + 3) % 4)];
      auto& r = rot[idx(v)];
      int p = position_of(r, prev);
      if (p < 0) throw GraphError("face walk does not match the rotation");
      r.insert(r.begin() + p + 1, c);
    }
    rot.push_back({w[0], w[3], w[2], w[1]});
  }
  std::vector<Edge> edges = sk.edges();
  for (const auto& c : crossings) {
    edges.push_back(c.first);
    edges.push_back(c.second);
  }
  return OnePlaneDrawing{Graph::from_edges(n, edges), std::move(crossings), PlaneEmbedding(std::move(rot))};
}

// --- reports -----------------------------------------------------------------

bool DrawingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* DrawingReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool DrawingReport::passed(std::string_view name) const {
  const Check* c = find(name);
  return c && c->passed;
}

std::string DrawingReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    for (const auto& w : c.witnesses) os << "\n    " << w;
    os << '\n';
  }
  return os.str();
}

namespace {

// Checks live in a deque so references handed out by add() stay valid.
struct ReportBuilder {
  std::deque<Check> checks;
  Check& add(std::string_view name) {
    checks.push_back(Check{std::string(name), true, {}});
    return checks.back();
  }
  DrawingReport report() const { return DrawingReport{{checks.begin(), checks.end()}}; }
  static void fail(Check& c, std::string witness) {
    c.passed = false;
    if (c.witnesses.size() < 32) c.witnesses.push_back(std::move(witness));
  }
};

}  // namespace

DrawingReport validate_drawing(const OnePlaneDrawing& d) {
  ReportBuilder rb;
  const int n = d.base.order();
  const int total = n + d.crossing_count();

  Check& count = rb.add("planarization-vertex-count");
  if (d.planarization.order() != total) {
    ReportBuilder::fail(count, "planarization has " + std::to_string(d.planarization.order()) + " vertices, expected " + std::to_string(total));
    return rb.report();
  }

  Check& rot = rb.add("rotation-system");
  if (auto problem = d.planarization.check(); !problem.empty()) ReportBuilder::fail(rot, problem);

  Check& exists = rb.add("crossing-edges-exist");
  Check& once = rb.add("edge-crossed-at-most-once");
  Check& disjoint = rb.add("crossing-edges-disjoint");
  std::map<Edge, int> crossed;
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings[idx(i)];
    for (Edge e : {c.first, c.second}) {
      if (!d.base.has_edge(e.u, e.v)) ReportBuilder::fail(exists, "crossing " + std::to_string(i) + " uses non-edge " + edge_str(e));
      auto [it, fresh] = crossed.emplace(e, i);
      if (!fresh) {
        ReportBuilder::fail(once, "edge crossed twice: " + edge_str(e) + " in crossings " + std::to_string(it->second) + " and " + std::to_string(i));
      }
    }
    if (c.first.shares_endpoint(c.second) || c.first == c.second) {
      ReportBuilder::fail(disjoint, "crossing " + std::to_string(i) + " pairs incident edges " + edge_str(c.first) + " and " + edge_str(c.second));
    }
  }

  Check& alternation = rb.add("dummy-alternation");
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings[idx(i)];
    const Vertex dv = d.dummy_of(i);
    const auto& r = d.planarization.rotation(dv);
    std::vector<Vertex> expect{c.first.u, c.first.v, c.second.u, c.second.v};
    std::vector<Vertex> got = r;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (r.size() != 4 || got != expect) {
      ReportBuilder::fail(alternation, "dummy " + std::to_string(dv) + " is not adjacent to exactly the four crossing endpoints");
      continue;
    }
    // Halves of the same edge must be opposite at the dummy.
    if (Edge(r[0], r[2]) != c.first && Edge(r[0], r[2]) != c.second) {
      ReportBuilder::fail(alternation, "dummy " + std::to_string(dv) + " rotation does not alternate between " + edge_str(c.first) + " and " + edge_str(c.second));
    }
  }

  Check& match = rb.add("planarization-matches-base");
  std::set<Edge> drawn;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : d.planarization.rotation(v)) {
      if (w < n) {
        if (v < w) drawn.insert(Edge(v, w));
        if (crossed.count(Edge(v, w))) ReportBuilder::fail(match, "crossing edge " + edge_str(Edge(v, w)) + " also drawn uncrossed");
      } else if (w >= total) {
        ReportBuilder::fail(match, "vertex " + std::to_string(v) + " adjacent to unknown vertex " + std::to_string(w));
      }
    }
  for (Vertex dv = n; dv < total; ++dv)
    for (Vertex w : d.planarization.rotation(dv))
      if (w >= n) ReportBuilder::fail(match, "dummies " + std::to_string(dv) + " and " + std::to_string(w) + " adjacent");
  for (const auto& [e, i] : crossed) drawn.insert(e);
  std::vector<Edge> base_edges = d.base.edges();
  if (std::vector<Edge>(drawn.begin(), drawn.end()) != base_edges) {
    for (const Edge& e : base_edges)
      if (!drawn.count(e)) ReportBuilder::fail(match, "edge " + edge_str(e) + " missing from planarization");
    for (const Edge& e : drawn)
      if (!d.base.has_edge(e.u, e.v)) ReportBuilder::fail(match, "planarization draws non-edge " + edge_str(e));
  }
  return rb.report();
}

PlaneEmbedding planar_skeleton(const OnePlaneDrawing& d) {
  const int n = d.base.order();
  std::vector<std::vector<Vertex>> rot(idx(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : d.planarization.rotation(v))
      if (w < n) rot[idx(v)].push_back(w);
  return PlaneEmbedding(std::move(rot));
}

std::vector<DrawingFace> faces(const OnePlaneDrawing& d) {
  std::vector<DrawingFace> out;
  for (auto& walk : d.planarization.faces()) {
    bool crossed = std::any_of(walk.begin(), walk.end(), [&](Vertex v) { return d.is_dummy(v); });
    out.push_back(DrawingFace{std::move(walk), crossed});
  }
  return out;
}

DrawingReport check_optimal_structure(const OnePlaneDrawing& d) {
  using namespace optimal_checks;
  ReportBuilder rb;
  const int n = d.base.order();

  Check& count = rb.add(kEdgeCount);
  const long long want = 4LL * n - 8;
  if (static_cast<long long>(d.base.size()) != want) {
    ReportBuilder::fail(count, "m = " + std::to_string(d.base.size()) + ", 4n-8 = " + std::to_string(want));
  }

  PlaneEmbedding sk = planar_skeleton(d);
  Graph skg = sk.graph();
  auto sk_faces = sk.faces();

  Check& quad = rb.add(kQuadrangulation);
  if (auto problem = sk.check(); !problem.empty()) ReportBuilder::fail(quad, "skeleton: " + problem);
  for (std::size_t f = 0; f < sk_faces.size(); ++f) {
    const auto& w = sk_faces[f];
    if (w.size() != 4) ReportBuilder::fail(quad, "skeleton face " + std::to_string(f) + " has length " + std::to_string(w.size()));
  }
  if (auto pair = find_separation_pair(skg); pair || n < 4 || !is_connected(skg)) {
    ReportBuilder::fail(quad, pair ? "separation pair {" + std::to_string(pair->first) + "," + std::to_string(pair->second) + "}"
                                   : std::string("skeleton is not 3-connected"));
  }

  // Dummies sitting in each skeleton face: the crossing edges between two
  // consecutive skeleton neighbors a, succ(a) at v lie in the face of dart a->v.
  Check& one_pair = rb.add(kOnePairPerFace);
  std::map<std::pair<Vertex, Vertex>, std::size_t> face_of_dart;
  for (std::size_t f = 0; f < sk_faces.size(); ++f) {
    const auto& w = sk_faces[f];
    if (w.size() < 2) continue;
    for (std::size_t i = 0; i < w.size(); ++i) face_of_dart[{w[i], w[(i + 1) % w.size()]}] = f;
  }
  std::vector<std::set<Vertex>> inside(sk_faces.size());
  bool located = true;
  for (Vertex v = 0; v < n; ++v) {
    const auto& full = d.planarization.rotation(v);
    const int deg = static_cast<int>(full.size());
    for (int i = 0; i < deg; ++i) {
      Vertex a = full[idx(i)];
      if (d.is_dummy(a)) continue;
      for (int k = 1; k < deg; ++k) {
        Vertex x = full[idx((i + k) % deg)];
        if (!d.is_dummy(x)) break;
        auto it = face_of_dart.find({a, v});
        if (it == face_of_dart.end()) {
          located = false;
          continue;
        }
        inside[it->second].insert(x);
      }
    }
  }
  if (!located) ReportBuilder::fail(one_pair, "a crossing could not be located in a skeleton face");
  std::vector<int> faces_per_dummy(idx(d.crossing_count()), 0);
  for (std::size_t f = 0; f < sk_faces.size(); ++f) {
    const auto& w = sk_faces[f];
    if (inside[f].size() != 1) {
      ReportBuilder::fail(one_pair, "skeleton face " + std::to_string(f) + " holds " + std::to_string(inside[f].size()) + " crossings");
      continue;
    }
    const Vertex dv = *inside[f].begin();
    ++faces_per_dummy[idx(dv - n)];
    const auto& c = d.crossings[idx(dv - n)];
    if (w.size() == 4) {
      std::set<Edge> diagonals{Edge(w[0], w[2]), Edge(w[1], w[3])};
      if (diagonals != std::set<Edge>{c.first, c.second}) {
        ReportBuilder::fail(one_pair, "crossing in skeleton face " + std::to_string(f) + " is not the pair of its diagonals");
      }
    }
  }
  for (int i = 0; i < d.crossing_count(); ++i)
    if (faces_per_dummy[idx(i)] != 1) ReportBuilder::fail(one_pair, "crossing " + std::to_string(i) + " is not inside exactly one skeleton face");

  Check& alt = rb.add(kAlternation);
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = d.planarization.rotation(v);
    const std::size_t deg = r.size();
    bool ok = deg % 2 == 0;
    for (std::size_t i = 0; ok && i < deg; ++i) ok = d.is_dummy(r[i]) != d.is_dummy(r[(i + 1) % deg]);
    if (!ok) ReportBuilder::fail(alt, "vertex " + std::to_string(v) + " has two consecutive crossing or non-crossing edges");
  }

  Check& bip = rb.add(kBipartite);
  if (!is_bipartite(skg)) ReportBuilder::fail(bip, "skeleton contains an odd cycle");

  Check& kite = rb.add(kKite);
  for (int i = 0; i < d.crossing_count(); ++i) {
    const auto& r = d.planarization.rotation(d.dummy_of(i));
    if (r.size() != 4) {
      ReportBuilder::fail(kite, "dummy " + std::to_string(d.dummy_of(i)) + " has degree " + std::to_string(r.size()));
      continue;
    }
    for (int k = 0; k < 4; ++k) {
      Edge side(r[idx(k)], r[idx((k + 1) % 4)]);
      if (!d.base.has_edge(side.u, side.v)) {
        ReportBuilder::fail(kite, "kite side " + edge_str(side) + " of crossing " + std::to_string(i) + " missing");
      } else if (d.is_crossing_edge(side)) {
        ReportBuilder::fail(kite, "kite side " + edge_str(side) + " of crossing " + std::to_string(i) + " is crossed");
      }
    }
  }
  return rb.report();
}

std::vector<int> drawing_code(const OnePlaneDrawing& d) { return embedding_code(d.planarization, d.vertex_colors()); }

bool drawing_isomorphic(const OnePlaneDrawing& a, const OnePlaneDrawing& b) {
  if (a.base.order() != b.base.order() || a.base.size() != b.base.size() || a.crossing_count() != b.crossing_count()) return false;
  return drawing_code(a) == drawing_code(b);
}

OnePlaneDrawing mirrored(const OnePlaneDrawing& d) { return OnePlaneDrawing{d.base, d.crossings, d.planarization.mirrored()}; }

// --- .1pd ----------------------------------------------------------------------

std::string emit_1pd(const OnePlaneDrawing& d) {
  std::ostringstream os;
  os << "n " << d.base.order() << " c " << d.crossing_count() << '\n';
  for (const auto& c : d.crossings) os << "x " << c.first.u << ' ' << c.first.v << ' ' << c.second.u << ' ' << c.second.v << '\n';
  for (Vertex v = 0; v < d.planarization.order(); ++v) {
    os << "r " << v;
    for (Vertex w : d.planarization.rotation(v)) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

OnePlaneDrawing parse_1pd(std::string_view text) {
  std::size_t pos = 0;
  auto line_start = pos;
  auto next_line = [&]() -> std::optional<std::string_view> {
    while (pos < text.size()) {
      line_start = pos;
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
      if (!line.empty() && line.front() != '#') return line;
    }
    return std::nullopt;
  };
  auto ints = [&](std::string_view line, char tag) {
    std::istringstream is{std::string(line.substr(1))};
    std::vector<long long> out;
    long long x;
    while (is >> x) out.push_back(x);
    if (!is.eof()) throw ParseError(std::string(".1pd: malformed '") + tag + "' line", line_start);
    return out;
  };
  auto header = next_line();
  if (!header) throw ParseError(".1pd: empty input", 0);
  int n = 0, c = 0;
  {
    std::istringstream is{std::string(*header)};
    std::string tn, tc;
    if (!(is >> tn >> n >> tc >> c) || tn != "n" || tc != "c" || n < 0 || c < 0) {
      throw ParseError(".1pd: header must be 'n <real-count> c <crossing-count>'", line_start);
    }
  }
  const int total = n + c;
  std::vector<Crossing> crossings;
  std::vector<std::vector<Vertex>> rot(idx(total));
  std::vector<char> have(idx(total), 0);
  std::vector<Edge> edges;
  while (auto line = next_line()) {
    const char tag = line->front();
    auto v = ints(*line, tag);
    auto in_range = [&](long long x, int limit) { return x >= 0 && x < limit; };
    if (tag == 'x') {
      if (v.size() != 4 || !std::all_of(v.begin(), v.end(), [&](long long x) { return in_range(x, n); }) || v[0] == v[1] || v[2] == v[3]) {
        throw ParseError(".1pd: crossing line needs four real endpoints forming two edges", line_start);
      }
      Crossing cr{Edge(static_cast<int>(v[0]), static_cast<int>(v[1])), Edge(static_cast<int>(v[2]), static_cast<int>(v[3]))};
      crossings.push_back(cr);
      edges.push_back(cr.first);
      edges.push_back(cr.second);
    } else if (tag == 'r') {
      if (v.empty() || !in_range(v[0], total)) throw ParseError(".1pd: rotation line names a vertex out of range", line_start);
      const auto vert = static_cast<std::size_t>(v[0]);
      if (have[vert]) throw ParseError(".1pd: duplicate rotation line for vertex " + std::to_string(vert), line_start);
      have[vert] = 1;
      for (std::size_t k = 1; k < v.size(); ++k) {
        if (!in_range(v[k], total)) throw ParseError(".1pd: neighbor out of range", line_start);
        rot[vert].push_back(static_cast<Vertex>(v[k]));
        if (static_cast<int>(vert) < n && v[k] < n && v[k] != v[0]) edges.emplace_back(static_cast<int>(vert), static_cast<int>(v[k]));
      }
    } else {
      throw ParseError(std::string(".1pd: unknown line tag '") + tag + "'", line_start);
    }
  }
  if (static_cast<int>(crossings.size()) != c) throw ParseError(".1pd: header announces " + std::to_string(c) + " crossings", 0);
  for (int v = 0; v < total; ++v)
    if (!have[idx(v)]) throw ParseError(".1pd: missing rotation line for vertex " + std::to_string(v), text.size());
  return OnePlaneDrawing{Graph::from_edges(n, edges), std::move(crossings), PlaneEmbedding(std::move(rot))};
}

std::string emit_planarization_edges(const OnePlaneDrawing& d) {
  std::ostringstream os;
  Graph p = d.planarization.graph();
  os << p.order() << ' ' << p.size() << '\n';
  for (const Edge& e : p.edges()) os << e.u << ' ' << e.v << '\n';
  os << "# dummies:";
  for (Vertex v = d.base.order(); v < p.order(); ++v) os << ' ' << v;
  os << '\n';
  return os.str();
}

}  // namespace oneplanar
