#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pancyclic/bipartite.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

// Breadth-first layering of a bipartite subgraph from a root, with the tree
// drawn in the plane: children in ascending id order, and each layer ordered
// left to right by the depth-first preorder that respects that child order.
struct BfsLayering {
  Vertex root = 0;
  std::size_t min_degree = 0;      // d of the bipartite host
  std::size_t density_index = 0;   // m
  std::vector<std::vector<Vertex>> layers;      // N_0, N_1, ... in plane order
  std::vector<std::size_t> layer_edges;         // e(N_i, N_{i+1})
  std::vector<Vertex> parent;                   // -1 for the root and unreached vertices
  std::vector<int> depth;                       // -1 when unreached
  std::vector<std::size_t> rank;                // position inside the vertex's layer
  std::vector<std::vector<Vertex>> children;

  int depth_of(Vertex v) const { return depth[static_cast<std::size_t>(v)]; }
  Vertex parent_of(Vertex v) const { return parent[static_cast<std::size_t>(v)]; }
  std::size_t rank_of(Vertex v) const { return rank[static_cast<std::size_t>(v)]; }

  const std::vector<Vertex>& layer(std::size_t i) const {
    static const std::vector<Vertex> empty;
    return i < layers.size() ? layers[i] : empty;
  }

  Vertex lca(Vertex a, Vertex b) const {
    while (depth_of(a) > depth_of(b)) a = parent_of(a);
    while (depth_of(b) > depth_of(a)) b = parent_of(b);
    while (a != b) {
      a = parent_of(a);
      b = parent_of(b);
    }
    return a;
  }

  // Tree path a -> lca -> b.
  std::vector<Vertex> tree_path(Vertex a, Vertex b) const {
    Vertex top = lca(a, b);
    std::vector<Vertex> up, down;
    for (Vertex v = a; v != top; v = parent_of(v)) up.push_back(v);
    up.push_back(top);
    for (Vertex v = b; v != top; v = parent_of(v)) down.push_back(v);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
  }

  // Tree path from the root down to v.
  std::vector<Vertex> root_path(Vertex v) const {
    std::vector<Vertex> out;
    for (; v != -1; v = parent_of(v)) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

// True when e(N_i, N_{i+1}) >= (2d/9)(|N_i| + |N_{i+1}|).
inline bool dense_layer_pair(std::size_t edges, std::size_t a, std::size_t b, std::size_t d) {
  return 9 * edges >= 2 * d * (a + b);
}

// Layers the component of x in b. Parents are the lowest-id neighbor in the
// previous layer. The density index m is the least i with
// e(N_i, N_{i+1}) >= (2d/9)(|N_i| + |N_{i+1}|), d the minimum degree of b;
// for d >= 5 this forces m >= 1 and |N_{i+1}| >= 2|N_i| below m.
inline BfsLayering bfs_layering(const BipartiteSub& b, Vertex x) {
  const Graph& g = b.graph;
  const std::size_t n = g.order();
  if (!b.contains(x)) throw InputError("root " + std::to_string(x) + " is not in the bipartite subgraph");
  BfsLayering L;
  L.root = x;
  L.min_degree = b.min_degree();
  if (L.min_degree < 5)
    throw PreconditionError("bfs_layering needs minimum degree >= 5, got " + std::to_string(L.min_degree));

  L.parent.assign(n, -1);
  L.depth.assign(n, -1);
  L.rank.assign(n, 0);
  L.children.assign(n, {});

  std::vector<std::vector<Vertex>> by_id{{x}};
  L.depth[static_cast<std::size_t>(x)] = 0;
  while (true) {
    std::vector<Vertex> next;
    const int d_next = static_cast<int>(by_id.size());
    for (Vertex v : by_id.back())
      for (Vertex w : g.neighbors(v))
        if (L.depth[static_cast<std::size_t>(w)] == -1) {
          L.depth[static_cast<std::size_t>(w)] = d_next;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      for (Vertex p : g.neighbors(w))
        if (L.depth[static_cast<std::size_t>(p)] == d_next - 1) {
          L.parent[static_cast<std::size_t>(w)] = p;
          L.children[static_cast<std::size_t>(p)].push_back(w);
          break;
        }
    }
    by_id.push_back(std::move(next));
  }

  // Children lists are ascending because each layer was scanned in id order.
  L.layers.assign(by_id.size(), {});
  std::vector<Vertex> stack{x};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto& lay = L.layers[static_cast<std::size_t>(L.depth_of(v))];
    L.rank[static_cast<std::size_t>(v)] = lay.size();
    lay.push_back(v);
    const auto& ch = L.children[static_cast<std::size_t>(v)];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }

  L.layer_edges.assign(L.layers.size(), 0);
  for (std::size_t i = 1; i < L.layers.size(); ++i)
    for (Vertex w : L.layers[i])
      for (Vertex p : g.neighbors(w))
        if (L.depth[static_cast<std::size_t>(p)] == static_cast<int>(i) - 1) ++L.layer_edges[i - 1];

  for (std::size_t i = 0; i + 1 < L.layers.size(); ++i)
    if (dense_layer_pair(L.layer_edges[i], L.layers[i].size(), L.layers[i + 1].size(), L.min_degree)) {
      L.density_index = i;
      return L;
    }
  throw HypothesisViolation("bfs_layering",
                            "internal contradiction: no layer pair reaches density 2d/9 before the "
                            "component of " + std::to_string(x) + " is exhausted");
}

}  // namespace pancyclic
