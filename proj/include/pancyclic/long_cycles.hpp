#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "pancyclic/absorption.hpp"
#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/random.hpp"

namespace pancyclic {

struct LongCyclesResult {
  std::vector<Vertex> x_set;
  int attempts = 0;             // partitions sampled, the last one accepted
  std::vector<Vertex> removed;  // the vertex y dropped at each step, in order
  std::map<std::size_t, Cycle> cycles;
};

// Samples X with probability 1/24 per vertex (ascending id) until |X| <= n/16
// and every vertex has at least 25k/2 neighbors in X.
inline std::vector<Vertex> sample_long_cycle_partition(const Graph& g, int k, RandomSource& rng, int& attempts) {
  const std::size_t n = g.order();
  for (attempts = 1; attempts <= kRetryCap; ++attempts) {
    std::vector<Vertex> xs;
    for (std::size_t v = 0; v < n; ++v)
      if (rng.one_in(24)) xs.push_back(static_cast<Vertex>(v));
    if (16 * xs.size() > n) continue;
    auto in_x = membership(n, xs);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      ok = 2 * count_neighbors_in(g, static_cast<Vertex>(v), in_x) >= 25 * static_cast<std::size_t>(k);
    if (ok) return xs;
  }
  attempts = kRetryCap;
  throw RandomnessFailure("long_cycles", rng.seed(), kRetryCap);
}

// Hamilton cycles of G_n, G_{n-1}, ..., G_{ceil(n/12)}, each obtained from
// the previous one by contracting a jump of length <= 8k whose interior holds
// a vertex y outside X, then re-absorbing every other interior vertex.
inline LongCyclesResult long_cycles(const Graph& g, const Cycle& c, int k, RandomSource& rng) {
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  if (k < 3) throw PreconditionError("long_cycles needs k >= 3");
  if (n > 150 * kk * kk * kk) throw PreconditionError("long_cycles needs n <= 150k^3");
  if (g.min_degree() < 600 * kk) throw PreconditionError("long_cycles needs minimum degree >= 600k");
  if (c.length() != n) throw PreconditionError("long_cycles needs a Hamilton cycle");
  if (auto v = verify_cycle(g, c); !v) throw PreconditionError("long_cycles: cycle does not verify: " + v.failure);

  LongCyclesResult r;
  r.x_set = sample_long_cycle_partition(g, k, rng, r.attempts);
  auto in_x = membership(n, r.x_set);

  Cycle cur = c;
  r.cycles.emplace(n, cur);
  const std::size_t target = (n + 11) / 12;
  while (cur.length() > target) {
    const std::size_t len = cur.length();
    const std::size_t reach = std::min(8 * kk, len - 1);
    bool done = false;
    for (std::size_t p = 0; p < len && !done; ++p) {
      for (std::size_t j = 2; j <= reach && !done; ++j) {
        if (!g.has_edge(cur.verts[p], cur.verts[(p + j) % len])) continue;
        Jump jump{Interval{p, j}};
        auto interior = jump.interior(cur);
        Vertex y = -1;
        for (Vertex v : interior)
          if (!in_x[static_cast<std::size_t>(v)] && (y == -1 || v < y)) y = v;
        if (y == -1) continue;
        interior.erase(std::find(interior.begin(), interior.end(), y));
        cur = absorb_all(g, contract_jump(cur, jump), interior, k);
        r.removed.push_back(y);
        done = true;
      }
    }
    if (!done)
      throw HypothesisViolation("long_cycles", "no jump of length <= 8k has an interior vertex outside X",
                                r.x_set);
    r.cycles.emplace(cur.length(), cur);
  }
  return r;
}

}  // namespace pancyclic
