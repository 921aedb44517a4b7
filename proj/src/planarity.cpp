#include "oneplanar/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace oneplanar {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int k = 0;
  for (const Edge& e : g.edges()) {
    auto [d, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    (void)ok;
    boost::put(boost::edge_index, bg, d, k++);
  }
  return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() >= 3 && g.size() > 3 * static_cast<std::size_t>(g.order()) - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<PlaneEmbedding> planar_embedding(const Graph& g) {
  if (g.order() >= 3 && g.size() > 3 * static_cast<std::size_t>(g.order()) - 6) return std::nullopt;
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> emb(static_cast<std::size_t>(g.order()));
  auto emb_map = boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = emb_map)) {
    return std::nullopt;
  }
  std::vector<std::vector<Vertex>> rot(emb.size());
  for (std::size_t v = 0; v < emb.size(); ++v)
    for (const BoostEdge& e : emb[v]) {
      auto s = boost::source(e, bg), t = boost::target(e, bg);
      rot[v].push_back(static_cast<Vertex>(s == v ? t : s));
    }
  return PlaneEmbedding(std::move(rot));
}

}  // namespace oneplanar
