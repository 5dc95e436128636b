#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic {

enum class Side : std::uint8_t { none = 0, x = 1, y = 2 };

// Bipartite subgraph of a host graph, kept in host ids. `graph` carries
// exactly the host edges between part X and part Y; vertices on Side::none are
// not members and are isolated in `graph`.
struct BipartiteSub {
  Graph graph;
  std::vector<Side> side;

  bool contains(Vertex v) const { return side[static_cast<std::size_t>(v)] != Side::none; }
  Side side_of(Vertex v) const { return side[static_cast<std::size_t>(v)]; }

  std::vector<Vertex> part(Side s) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] == s) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] != Side::none) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  // Minimum cross-degree over members (0 when there are none).
  std::size_t min_degree() const {
    bool any = false;
    std::size_t d = 0;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] != Side::none) {
        std::size_t dv = graph.degree(static_cast<Vertex>(v));
        d = any ? std::min(d, dv) : dv;
        any = true;
      }
    return d;
  }
};

// Keeps every host edge between `xs` and `ys` (which must be disjoint).
inline BipartiteSub make_bipartite_sub(const Graph& host, std::span<const Vertex> xs,
                                       std::span<const Vertex> ys) {
  BipartiteSub b;
  b.side.assign(host.order(), Side::none);
  for (Vertex v : xs) b.side[static_cast<std::size_t>(v)] = Side::x;
  for (Vertex v : ys) {
    if (b.side[static_cast<std::size_t>(v)] != Side::none)
      throw InputError("bipartite parts overlap at vertex " + std::to_string(v));
    b.side[static_cast<std::size_t>(v)] = Side::y;
  }
  std::vector<std::vector<Vertex>> adj(host.order());
  for (std::size_t v = 0; v < host.order(); ++v) {
    if (b.side[v] == Side::none) continue;
    for (Vertex w : host.neighbors(static_cast<Vertex>(v))) {
      Side sw = b.side[static_cast<std::size_t>(w)];
      if (sw != Side::none && sw != b.side[v]) adj[v].push_back(w);
    }
  }
  b.graph = Graph::from_adjacency(std::move(adj));
  return b;
}

// Local-search max cut on the subgraph induced by `members`: start from the
// even/odd id split and flip any vertex with more same-side than cross-side
// neighbors (lowest id first) until none remains. Each flip strictly grows
// the cut, so this terminates, and afterwards every member has at least
// ceil(deg/2) cross neighbors, deg being its degree inside `members`.
inline BipartiteSub bipartite_subgraph(const Graph& g, std::span<const Vertex> members) {
  const std::size_t n = g.order();
  auto in = membership(n, members);
  std::vector<Side> side(n, Side::none);
  for (Vertex v : members) side[static_cast<std::size_t>(v)] = (v % 2 == 0) ? Side::x : Side::y;

  std::vector<std::int64_t> same(n, 0), cross(n, 0);
  for (Vertex v : members)
    for (Vertex w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)]) {
        if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)])
          ++same[static_cast<std::size_t>(v)];
        else
          ++cross[static_cast<std::size_t>(v)];
      }

  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : sorted) {
      auto vi = static_cast<std::size_t>(v);
      if (same[vi] <= cross[vi]) continue;
      Side old = side[vi];
      side[vi] = old == Side::x ? Side::y : Side::x;
      std::swap(same[vi], cross[vi]);
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (!in[wi]) continue;
        if (side[wi] == old) {
          --same[wi];
          ++cross[wi];
        } else {
          ++same[wi];
          --cross[wi];
        }
      }
      changed = true;
    }
  }

  std::vector<Vertex> xs, ys;
  for (Vertex v : sorted) (side[static_cast<std::size_t>(v)] == Side::x ? xs : ys).push_back(v);
  return make_bipartite_sub(g, xs, ys);
}

inline BipartiteSub bipartite_subgraph(const Graph& g) {
  auto all = all_vertices(g);
  return bipartite_subgraph(g, all);
}

}  // namespace pancyclic
