#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "pancyclic/certificate.hpp"
#include "pancyclic/cores.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/paths.hpp"

namespace pancyclic {

// Inserts x into a Hamilton cycle `h` of G[V(h)]. With A the cycle positions
// adjacent to x and A+ their successors, the lexicographically first pair of
// positions y < z in A+ whose vertices are adjacent gives the new cycle
//   x, h[z-1], h[z-2], ..., h[y], h[z], ..., h[n-1], h[0], ..., h[y-1].
inline Cycle absorb_vertex(const Graph& g, const Cycle& h, Vertex x, int k) {
  const std::size_t n = h.verts.size();
  if (!g.contains(x)) throw InputError("vertex " + std::to_string(x) + " out of range");
  auto pos = cycle_positions(g.order(), h);
  if (pos[static_cast<std::size_t>(x)] != -1)
    throw InputError("vertex " + std::to_string(x) + " already lies on the cycle");

  std::vector<std::size_t> plus;
  for (Vertex w : g.neighbors(x))
    if (auto p = pos[static_cast<std::size_t>(w)]; p != -1) plus.push_back((static_cast<std::size_t>(p) + 1) % n);
  if (plus.size() < static_cast<std::size_t>(k) + 1)
    throw PreconditionError("absorb_vertex: vertex " + std::to_string(x) + " has " +
                            std::to_string(plus.size()) + " neighbors on the cycle, needs k+1 = " +
                            std::to_string(k + 1));
  std::sort(plus.begin(), plus.end());

  for (std::size_t i = 0; i < plus.size(); ++i)
    for (std::size_t j = i + 1; j < plus.size(); ++j) {
      if (!g.has_edge(h.verts[plus[i]], h.verts[plus[j]])) continue;
      const std::size_t y = plus[i], z = plus[j];
      Cycle out;
      out.verts.reserve(n + 1);
      out.verts.push_back(x);
      for (std::size_t t = z; t-- > y;) out.verts.push_back(h.verts[t]);
      for (std::size_t t = z; t < n; ++t) out.verts.push_back(h.verts[t]);
      for (std::size_t t = 0; t < y; ++t) out.verts.push_back(h.verts[t]);
      return out;
    }

  std::vector<Vertex> witness;
  for (std::size_t p : plus) witness.push_back(h.verts[p]);
  std::sort(witness.begin(), witness.end());
  throw HypothesisViolation("absorb_vertex",
                            "the " + std::to_string(witness.size()) +
                                " cycle successors of the neighbors of " + std::to_string(x) +
                                " are independent (alpha > k)",
                            witness);
}

// Absorbs `vertices` one at a time in ascending id order.
inline Cycle absorb_all(const Graph& g, Cycle c, std::vector<Vertex> vertices, int k) {
  std::sort(vertices.begin(), vertices.end());
  for (Vertex v : vertices) c = absorb_vertex(g, c, v, k);
  return c;
}

// Interior vertex of a jump with at most k neighbors in `on_cycle` outside
// the interior, lowest id first; -1 when every interior vertex has k+1.
inline Vertex first_bad_interior(const Graph& g, const std::vector<char>& on_cycle,
                                 std::vector<Vertex> interior, int k) {
  std::sort(interior.begin(), interior.end());
  std::vector<char> inside(g.order(), 0);
  for (Vertex v : interior) inside[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : interior) {
    std::size_t outside = 0;
    for (Vertex w : g.neighbors(v))
      if (on_cycle[static_cast<std::size_t>(w)] && !inside[static_cast<std::size_t>(w)]) ++outside;
    if (outside < static_cast<std::size_t>(k) + 1) return v;
  }
  return -1;
}

struct VertexRemoval {
  Cycle cycle;     // Hamilton cycle of the remaining vertices
  Vertex removed;  // lowest-id interior vertex of the jump used
  Jump jump;       // on the input cycle
};

// Takes the jump of each interval in order, contracts the first good one and
// re-absorbs all its interior vertices but the lowest-id one. The intervals
// must be 2k-intervals of `c` and pairwise disjoint.
inline VertexRemoval remove_via_good_jump(const Graph& g, const Cycle& c,
                                          std::span<const Interval> intervals, int k,
                                          const char* stage) {
  auto on_cycle = membership(g.order(), c.verts);
  std::vector<Vertex> bad;
  for (const Interval& iv : intervals) {
    Jump j = find_jump(g, c, iv, k);
    auto interior = j.interior(c);
    Vertex b = first_bad_interior(g, on_cycle, interior, k);
    if (b != -1) {
      bad.push_back(b);
      continue;
    }
    std::sort(interior.begin(), interior.end());
    Vertex keep_out = interior.front();
    interior.erase(interior.begin());
    return {absorb_all(g, contract_jump(c, j), interior, k), keep_out, j};
  }
  auto witness = greedy_independent_set(g, bad);
  throw HypothesisViolation(stage,
                            "none of the " + std::to_string(intervals.size()) +
                                " jumps is good; their low-degree interior vertices span "
                                "maximum degree <= k and contain an independent set of size " +
                                std::to_string(witness.size()),
                            witness);
}

// Cycle on all but one vertex of the Hamilton cycle `c` of G[V(c)], using
// s = k^2+k+1 disjoint 2k-intervals starting at positions i(2k+1).
inline VertexRemoval delete_one_vertex(const Graph& g, const Cycle& c, int k) {
  if (k < 1) throw PreconditionError("delete_one_vertex needs k >= 1");
  const std::size_t n = c.length();
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t s = kk * kk + kk + 1;
  if (n < (2 * kk + 1) * s)
    throw PreconditionError("delete_one_vertex needs a cycle of length >= (2k+1)(k^2+k+1) = " +
                            std::to_string((2 * kk + 1) * s) + ", got " + std::to_string(n));
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < s; ++i) intervals.push_back(Interval{i * (2 * kk + 1), 2 * kk});
  return remove_via_good_jump(g, c, intervals, k, "delete_one_vertex");
}

}  // namespace pancyclic
