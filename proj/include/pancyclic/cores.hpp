#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <variant>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic {

// Exact rational degree threshold: a degree `deg` passes iff deg * den >= num.
struct DegreeThreshold {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool admits(std::size_t deg) const noexcept {
    return static_cast<std::int64_t>(deg) * den >= num;
  }
};

// Peels vertices of degree below `t` (inside the current set) until none is
// left. The result is the unique maximal subset of `members` inducing minimum
// degree >= t; it may be empty.
inline std::vector<Vertex> min_degree_core(const Graph& g, DegreeThreshold t,
                                           std::span<const Vertex> members) {
  const std::size_t n = g.order();
  auto in = membership(n, members);
  std::vector<std::size_t> deg(n, 0);
  for (Vertex v : members) deg[static_cast<std::size_t>(v)] = count_neighbors_in(g, v, in);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> q;
  for (Vertex v : members)
    if (!t.admits(deg[static_cast<std::size_t>(v)])) q.push(v);
  while (!q.empty()) {
    Vertex v = q.top();
    q.pop();
    if (!in[static_cast<std::size_t>(v)]) continue;
    in[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (!in[wi]) continue;
      --deg[wi];
      if (!t.admits(deg[wi]) && t.admits(deg[wi] + 1)) q.push(w);
    }
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

inline std::vector<Vertex> min_degree_core(const Graph& g, DegreeThreshold t) {
  auto all = all_vertices(g);
  return min_degree_core(g, t, all);
}

// Lowest-id available vertex first; its neighbors become unavailable.
inline std::vector<Vertex> greedy_independent_set(const Graph& g, std::span<const Vertex> members) {
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  auto avail = membership(g.order(), sorted);
  std::vector<Vertex> out;
  for (Vertex v : sorted) {
    if (!avail[static_cast<std::size_t>(v)]) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) avail[static_cast<std::size_t>(w)] = 0;
  }
  return out;
}

inline std::vector<Vertex> greedy_independent_set(const Graph& g) {
  auto all = all_vertices(g);
  return greedy_independent_set(g, all);
}

struct Coloring {
  std::vector<int> color;  // per host vertex; -1 outside the colored set
  int colors = 0;

  // Largest color class, lowest color on ties.
  std::vector<Vertex> largest_class() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(colors), 0);
    for (int c : color)
      if (c >= 0) ++sizes[static_cast<std::size_t>(c)];
    auto best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < color.size(); ++v)
      if (color[v] == best) out.push_back(static_cast<Vertex>(v));
    return out;
  }
};

// Induced subgraph in which every vertex has degree > k.
struct CoreWitness {
  std::vector<Vertex> core;
};

using DegeneracyOutcome = std::variant<Coloring, CoreWitness>;

// Repeatedly deletes a vertex of degree <= k (lowest id first). If the whole
// set peels away, greedily colors in reverse deletion order with at most k+1
// colors; otherwise returns the non-empty remainder, whose minimum degree is
// at least k+1.
inline DegeneracyOutcome degeneracy_coloring(const Graph& g, int k, std::span<const Vertex> members) {
  const std::size_t n = g.order();
  auto in = membership(n, members);
  std::vector<std::size_t> deg(n, 0);
  for (Vertex v : members) deg[static_cast<std::size_t>(v)] = count_neighbors_in(g, v, in);
  const auto limit = static_cast<std::size_t>(std::max(k, 0));
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> q;
  for (Vertex v : members)
    if (deg[static_cast<std::size_t>(v)] <= limit) q.push(v);
  std::vector<Vertex> order;
  auto alive = in;
  while (!q.empty()) {
    Vertex v = q.top();
    q.pop();
    if (!alive[static_cast<std::size_t>(v)]) continue;
    alive[static_cast<std::size_t>(v)] = 0;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (!alive[wi]) continue;
      if (--deg[wi] == limit) q.push(w);
    }
  }
  if (order.size() < members.size()) {
    CoreWitness w;
    for (std::size_t v = 0; v < n; ++v)
      if (alive[v]) w.core.push_back(static_cast<Vertex>(v));
    return w;
  }
  Coloring c;
  c.color.assign(n, -1);
  std::vector<char> used;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    used.assign(limit + 2, 0);
    for (Vertex w : g.neighbors(*it)) {
      int cw = c.color[static_cast<std::size_t>(w)];
      if (cw >= 0 && static_cast<std::size_t>(cw) < used.size()) used[static_cast<std::size_t>(cw)] = 1;
    }
    int col = 0;
    while (used[static_cast<std::size_t>(col)]) ++col;
    c.color[static_cast<std::size_t>(*it)] = col;
    c.colors = std::max(c.colors, col + 1);
  }
  return c;
}

inline DegeneracyOutcome degeneracy_coloring(const Graph& g, int k) {
  auto all = all_vertices(g);
  return degeneracy_coloring(g, k, all);
}

// Under the promise alpha <= k and at least dk+1 members: a set of at most
// dk+1 vertices inducing minimum degree >= d. Works inside the dk+1
// lowest-id members; if they are (d-1)-degenerate their d-coloring exposes an
// independent set larger than k, which is reported as a violation.
inline std::vector<Vertex> bounded_core(const Graph& g, int d, int k, std::span<const Vertex> members) {
  if (d < 1 || k < 1) throw PreconditionError("bounded_core needs d >= 1 and k >= 1");
  const auto need = static_cast<std::size_t>(d) * static_cast<std::size_t>(k) + 1;
  if (members.size() < need)
    throw PreconditionError("bounded_core needs at least dk+1 = " + std::to_string(need) +
                            " vertices, got " + std::to_string(members.size()));
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.resize(need);
  auto outcome = degeneracy_coloring(g, d - 1, sorted);
  if (auto* w = std::get_if<CoreWitness>(&outcome)) return w->core;
  auto cls = std::get<Coloring>(outcome).largest_class();
  throw HypothesisViolation("bounded_core",
                            "the " + std::to_string(need) + " lowest-id vertices are " +
                                std::to_string(d) + "-colorable; a color class of size " +
                                std::to_string(cls.size()) + " exceeds k=" + std::to_string(k),
                            cls);
}

inline std::vector<Vertex> bounded_core(const Graph& g, int d, int k) {
  auto all = all_vertices(g);
  return bounded_core(g, d, k, all);
}

}  // namespace pancyclic
