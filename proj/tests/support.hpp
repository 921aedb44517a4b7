#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oneplanar/drawing.hpp"
#include "oneplanar/graph.hpp"

namespace testing_support {

using namespace oneplanar;

inline std::string fixture_text(const std::string& name) {
  std::ifstream f(std::string(ONEPLANAR_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline OnePlaneDrawing fixture_drawing(const std::string& name) { return parse_1pd(fixture_text(name)); }
inline Graph fixture_graph(const std::string& name) { return parse_graph6(fixture_text(name)); }

inline const std::vector<std::string>& drawing_fixtures() {
  static const std::vector<std::string> names{"k2222_optimal.1pd", "k23_one_crossing.1pd", "k23_planar.1pd", "k23_two_crossings.1pd",
                                              "k33_drawing_a.1pd", "k33_drawing_b.1pd",   "p3_c3_nested.1pd"};
  return names;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Relabels the real vertices of d by perm; dummies keep their indices.
inline OnePlaneDrawing relabel(const OnePlaneDrawing& d, const std::vector<int>& perm) {
  auto map = [&](Vertex v) { return d.is_dummy(v) ? v : perm[static_cast<std::size_t>(v)]; };
  OnePlaneDrawing out;
  out.base = permute(d.base, perm);
  for (const auto& c : d.crossings)
    out.crossings.push_back(Crossing{Edge(map(c.first.u), map(c.first.v)), Edge(map(c.second.u), map(c.second.v))});
  std::vector<std::vector<Vertex>> rot(d.planarization.rotations().size());
  for (Vertex v = 0; v < d.planarization.order(); ++v) {
    auto& r = rot[static_cast<std::size_t>(map(v))];
    for (Vertex w : d.planarization.rotation(v)) r.push_back(map(w));
  }
  out.planarization = PlaneEmbedding(std::move(rot));
  return out;
}

}  // namespace testing_support
