#pragma once

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "pancyclic/bfs_layering.hpp"
#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

// Longest increasing paths inside one layer. A path is increasing when its
// vertices appear in ascending plane order (BfsLayering::rank); edges are
// those of the host graph g, not of the bipartite subgraph.
struct LayerChains {
  std::size_t layer = 0;
  std::vector<Vertex> order;   // the layer in plane order
  std::vector<int> color;      // c(order[i]): length of the longest increasing path from it
  std::vector<std::int64_t> next;  // successor index on one such path, -1 at the end

  int max_color() const { return color.empty() ? 0 : *std::max_element(color.begin(), color.end()); }
};

inline LayerChains layer_chains(const Graph& g, const BfsLayering& L, std::size_t h) {
  LayerChains ch;
  ch.layer = h;
  ch.order = L.layer(h);
  const std::size_t z = ch.order.size();
  ch.color.assign(z, 0);
  ch.next.assign(z, -1);
  for (std::size_t i = z; i-- > 0;) {
    for (Vertex w : g.neighbors(ch.order[i])) {
      if (L.depth_of(w) != static_cast<int>(h)) continue;
      std::size_t r = L.rank_of(w);
      if (r <= i) continue;
      const std::int64_t best = ch.next[i];
      if (ch.color[r] + 1 > ch.color[i] ||
          (ch.color[r] + 1 == ch.color[i] && best != -1 && static_cast<std::int64_t>(r) < best)) {
        ch.color[i] = ch.color[r] + 1;
        ch.next[i] = static_cast<std::int64_t>(r);
      }
    }
  }
  return ch;
}

// The coloring side of the dichotomy: c is proper on the layer and uses
// colors 0..l-3, so its largest class is an independent set of size at least
// |Z|/(l-2).
struct IncreasingPathColoring {
  std::size_t layer = 0;
  std::vector<Vertex> order;
  std::vector<int> colors;
  std::vector<Vertex> independent_set;  // largest class, lowest color on ties, ascending ids
};

using EfrsOutcome = std::variant<Cycle, IncreasingPathColoring>;

namespace detail {

inline Cycle cycle_from_increasing_path(const BfsLayering& L, std::vector<Vertex> p, std::size_t h) {
  const Vertex top = L.lca(p.front(), p.back());
  const std::size_t span = 2 * (h - static_cast<std::size_t>(L.depth_of(top)));
  std::size_t lo = 0, hi = p.size() - 1;
  for (std::size_t step = 0; step + 2 < span; ++step) {
    if (L.lca(p[lo], p[hi - 1]) == top)
      --hi;
    else if (L.lca(p[lo + 1], p[hi]) == top)
      ++lo;
    else
      throw HypothesisViolation("efrs_dichotomy",
                                "neither endpoint of the increasing path can be dropped while "
                                "keeping its branch vertex",
                                {p.begin() + static_cast<std::ptrdiff_t>(lo),
                                 p.begin() + static_cast<std::ptrdiff_t>(hi) + 1});
  }
  Cycle c;
  c.verts.assign(p.begin() + static_cast<std::ptrdiff_t>(lo), p.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  auto back = L.tree_path(p[hi], p[lo]);
  c.verts.insert(c.verts.end(), back.begin() + 1, back.end() - 1);
  return c;
}

}  // namespace detail

// Either an l-cycle built from an increasing path of length l-2 in layer h
// (peeled down to the tree distance of its ends, then closed through the
// tree), or the increasing-path coloring of the layer.
inline EfrsOutcome efrs_dichotomy(const BfsLayering& L, const LayerChains& ch, std::size_t l) {
  const std::size_t h = ch.layer;
  if (l < 3) throw PreconditionError("efrs_dichotomy needs l >= 3");
  if (2 * h >= l) throw PreconditionError("efrs_dichotomy needs h < l/2");
  if (ch.order.empty()) throw PreconditionError("efrs_dichotomy needs a non-empty layer");
  const auto need = static_cast<int>(l - 2);

  for (std::size_t i = 0; i < ch.order.size(); ++i) {
    if (ch.color[i] < need) continue;
    std::vector<Vertex> path{ch.order[i]};
    std::size_t at = i;
    for (int s = 0; s < need; ++s) {
      at = static_cast<std::size_t>(ch.next[at]);
      path.push_back(ch.order[at]);
    }
    return detail::cycle_from_increasing_path(L, std::move(path), h);
  }

  IncreasingPathColoring out;
  out.layer = h;
  out.order = ch.order;
  out.colors = ch.color;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(ch.max_color()) + 1, 0);
  for (int c : ch.color) ++sizes[static_cast<std::size_t>(c)];
  const auto best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (std::size_t i = 0; i < ch.order.size(); ++i)
    if (ch.color[i] == best) out.independent_set.push_back(ch.order[i]);
  std::sort(out.independent_set.begin(), out.independent_set.end());
  return out;
}

inline EfrsOutcome efrs_dichotomy(const Graph& g, const BfsLayering& L, std::size_t h, std::size_t l) {
  return efrs_dichotomy(L, layer_chains(g, L, h), l);
}

}  // namespace pancyclic
