#pragma once

#include <memory>
#include <random>

#include "bundle.hpp"
#include "gauge_field.hpp"
#include "graph.hpp"
#include "group.hpp"

namespace ggtest {

using namespace gg;

inline GraphPtr make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                           int basepoint = 0) {
  return std::make_shared<Graph>(Graph::build(n, edges, basepoint));
}

inline GraphPtr triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline GraphPtr theta() { return make_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }
inline GraphPtr bouquet(int loops) {
  std::vector<std::pair<int, int>> edges(loops, {0, 0});
  return make_graph(1, edges);
}
inline GraphPtr path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

inline GroupPtr Z(int n) { return std::make_shared<Group>(Group::cyclic(n)); }
inline GroupPtr S(int n) { return std::make_shared<Group>(Group::symmetric(n)); }

inline BundlePtr trivial_bundle(const GraphPtr& g, const GroupPtr& G) {
  return std::make_shared<Bundle>(Bundle::trivial(g->vertex_count(), G));
}

inline GaugeField make_field(const GraphPtr& g, const GroupPtr& G,
                             const std::vector<Elem>& edge_labels) {
  return GaugeField::from_labels(g, trivial_bundle(g, G), edge_labels);
}

inline std::vector<Elem> random_labels(std::mt19937_64& rng, int count, int order) {
  std::vector<Elem> out(count);
  for (auto& l : out) l = static_cast<Elem>(rng() % order);
  return out;
}

// A bundle isomorphic to the trivial one but with shuffled point ids, so the
// point numbering carries no product structure.
inline BundlePtr shuffled_bundle(const GraphPtr& g, const GroupPtr& G, uint64_t seed) {
  int base = g->vertex_count();
  int ord = G->order();
  int total = base * ord;
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = total - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  std::vector<int> point_base(total);
  std::vector<std::vector<int>> action(total, std::vector<int>(ord));
  for (int x = 0; x < base; ++x)
    for (int gi = 0; gi < ord; ++gi) {
      int z = perm[x * ord + gi];
      point_base[z] = x;
      for (int h = 0; h < ord; ++h) action[z][h] = perm[x * ord + G->op(gi, h)];
    }
  return std::make_shared<Bundle>(Bundle::from_tables(G, point_base, action));
}

}  // namespace ggtest
