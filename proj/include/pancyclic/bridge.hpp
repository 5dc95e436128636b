#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pancyclic/bipartite.hpp"
#include "pancyclic/certificate.hpp"
#include "pancyclic/consecutive_paths.hpp"
#include "pancyclic/cores.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/paths.hpp"

namespace pancyclic {

inline std::size_t floor_log2(std::size_t v) { return v == 0 ? 0 : std::bit_width(v) - 1; }

// Smallest bridged length: 2k+1+floor(log2(2k+1)).
inline std::size_t bridge_lower_bound(int k) {
  const auto kk = static_cast<std::size_t>(k);
  return 2 * kk + 1 + floor_log2(2 * kk + 1);
}

// Joins a long arc of the Hamilton cycle of A to a family of x-y paths of
// consecutive lengths, each closed by the edges a-x and b-y.
struct ArcCloser {
  Vertex a = -1;
  Vertex b = -1;
  std::size_t slack = 0;  // lengths use q = l - m - slack
  ShorteningChain chain;
  const std::map<std::size_t, Path>* paths;  // x..y with x ~ a and y ~ b, contiguous lengths

  // Cycle of length l: shortened arc a..b, then b's path back to a.
  std::optional<Cycle> close(std::size_t l) const {
    const std::size_t lo = paths->begin()->first;
    if (l < lo + slack + 1) return std::nullopt;
    const std::size_t q = l - lo - slack;
    if (q > chain.original().length()) return std::nullopt;
    Path arc = chain.shortened(q);
    if (l < arc.length() + 2) return std::nullopt;
    auto it = paths->find(l - 2 - arc.length());
    if (it == paths->end()) return std::nullopt;
    Cycle c;
    c.verts = std::move(arc.verts);
    const auto& xy = it->second.verts;
    c.verts.insert(c.verts.end(), xy.rbegin(), xy.rend());
    return c;
  }
};

struct BridgeResult {
  std::vector<Vertex> core;  // H
  Vertex x = -1, y = -1, a = -1, b = -1;
  std::size_t m = 0;
  std::size_t lo = 0, hi = 0;
  std::map<std::size_t, Cycle> cycles;
};

// Cycles of every length in [2k+1+floor(log2(2k+1)), floor(|A|/2)] through
// the Hamilton cycle c_a of G[A] and a set B disjoint from A.
inline BridgeResult bridge_cycles(const Graph& g, const Cycle& c_a, std::span<const Vertex> b_set, int k,
                                  const char* stage = "bridge_cycles") {
  if (k < 1) throw PreconditionError("bridge_cycles needs k >= 1");
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  if (auto v = verify_cycle(g, c_a); !v) throw PreconditionError("bridge_cycles: cycle on A does not verify: " + v.failure);
  auto in_a = membership(n, c_a.verts);
  auto in_b = membership(n, b_set);
  for (Vertex v : b_set) {
    if (in_a[static_cast<std::size_t>(v)])
      throw PreconditionError("bridge_cycles: vertex " + std::to_string(v) + " lies in both A and B");
    if (count_neighbors_in(g, v, in_a) < 2)
      throw PreconditionError("bridge_cycles: vertex " + std::to_string(v) + " of B has fewer than 2 neighbors in A");
  }

  BridgeResult r;
  const std::size_t big = (9 * kk + 1) * kk + 1;
  std::size_t min_deg_b = b_set.empty() ? 0 : n;
  for (Vertex v : b_set) min_deg_b = std::min(min_deg_b, count_neighbors_in(g, v, in_b));
  if (b_set.size() <= big && min_deg_b >= 9 * kk + 1) {
    r.core.assign(b_set.begin(), b_set.end());
    std::sort(r.core.begin(), r.core.end());
  } else if (b_set.size() >= big) {
    r.core = bounded_core(g, static_cast<int>(9 * kk + 1), k, b_set);
  } else {
    throw PreconditionError("bridge_cycles needs |B| >= (9k+1)k+1 or minimum degree >= 9k+1 on B");
  }

  auto h = bipartite_subgraph(g, r.core);
  r.x = r.core.front();
  ConsecutivePathsOptions opts;
  opts.with_cycles = false;
  opts.max_window = 2 * kk - 2;
  auto cp = consecutive_paths(g, h, r.x, k, opts);
  r.y = cp.y;
  r.m = cp.m;
  if (r.m > floor_log2(2 * kk + 1))
    throw HypothesisViolation(stage, "density index m=" + std::to_string(r.m) + " exceeds log2(2k+1)", r.core);

  for (Vertex w : g.neighbors(r.x))
    if (in_a[static_cast<std::size_t>(w)]) {
      r.a = w;
      break;
    }
  for (Vertex w : g.neighbors(r.y))
    if (in_a[static_cast<std::size_t>(w)] && w != r.a) {
      r.b = w;
      break;
    }

  r.lo = bridge_lower_bound(k);
  r.hi = c_a.length() / 2;
  ArcCloser closer{r.a, r.b, 2 * kk, ShorteningChain(g, longer_arc(c_a, r.a, r.b), k), &cp.paths};
  for (std::size_t l = r.lo; l <= r.hi; ++l) {
    auto c = closer.close(l);
    if (!c) throw HypothesisViolation(stage, "no closing combination for length " + std::to_string(l));
    r.cycles.emplace(l, std::move(*c));
  }
  return r;
}

}  // namespace pancyclic
