#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "pancyclic/bfs_layering.hpp"
#include "pancyclic/bipartite.hpp"
#include "pancyclic/certificate.hpp"
#include "pancyclic/cores.hpp"
#include "pancyclic/efrs.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/paths.hpp"

namespace pancyclic {

struct ConsecutivePathsOptions {
  bool with_cycles = true;
  // Cycles are produced for 3..min(floor(|N_m|/k), cycle_cap).
  std::optional<std::size_t> cycle_cap;
  // Paths are produced for lengths m..m+window, window <= 2*delta(B')-2.
  std::optional<std::size_t> max_window;
};

struct ConsecutivePathsResult {
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;  // neighbor of y inside N'_m used for the odd lengths
  std::size_t m = 0;
  BfsLayering layering;
  BipartiteSub core;  // B' with parts N'_m (Side::x) and N'_{m+1} (Side::y)
  std::map<std::size_t, Cycle> cycles;
  std::map<std::size_t, Path> paths;  // x ... y

  std::size_t path_lo() const { return paths.begin()->first; }
  std::size_t path_hi() const { return paths.rbegin()->first; }
};

// Cycles for 3..floor(|N_m|/k) from the layers N_1..N_m, and x-y paths of
// every length in m..m+2*delta(B')-2 (optionally capped).
inline ConsecutivePathsResult consecutive_paths(const Graph& g, const BipartiteSub& b, Vertex x, int k,
                                                const ConsecutivePathsOptions& opts = {}) {
  const std::size_t d = b.min_degree();
  if (k < 1 || 2 * d <= 9 * static_cast<std::size_t>(k))
    throw PreconditionError("consecutive_paths needs minimum degree d > 9k/2 (d=" + std::to_string(d) +
                            ", k=" + std::to_string(k) + ")");
  ConsecutivePathsResult r;
  r.x = x;
  r.layering = bfs_layering(b, x);
  const BfsLayering& L = r.layering;
  r.m = L.density_index;
  const std::size_t m = r.m;
  const auto kk = static_cast<std::size_t>(k);

  if (opts.with_cycles) {
    std::size_t top = L.layer(m).size() / kk;
    if (opts.cycle_cap) top = std::min(top, *opts.cycle_cap);
    std::map<std::size_t, LayerChains> chains;
    for (std::size_t l = 3; l <= top; ++l) {
      std::size_t i = 1;
      while (i <= m && !(2 * i + 1 <= l && l <= L.layer(i).size() / kk)) ++i;
      if (i > m)
        throw HypothesisViolation("consecutive_paths",
                                  "no layer N_1..N_m covers cycle length " + std::to_string(l));
      auto it = chains.find(i);
      if (it == chains.end()) it = chains.emplace(i, layer_chains(g, L, i)).first;
      auto outcome = efrs_dichotomy(L, it->second, l);
      if (auto* col = std::get_if<IncreasingPathColoring>(&outcome))
        throw HypothesisViolation("consecutive_paths",
                                  "layer " + std::to_string(i) + " has no increasing path of length " +
                                      std::to_string(l - 2) + "; its coloring has an independent class of size " +
                                      std::to_string(col->independent_set.size()) + " > k",
                                  col->independent_set);
      r.cycles.emplace(l, std::get<Cycle>(std::move(outcome)));
    }
  }

  // B': the 2d/9-core of the bipartite graph between N_m and N_{m+1}.
  const auto& nm = L.layer(m);
  const auto& nm1 = L.layer(m + 1);
  auto bm = make_bipartite_sub(b.graph, nm, nm1);
  std::vector<Vertex> both(nm.begin(), nm.end());
  both.insert(both.end(), nm1.begin(), nm1.end());
  auto kept = min_degree_core(bm.graph, DegreeThreshold{2 * static_cast<std::int64_t>(d), 9}, both);
  auto kept_in = membership(g.order(), kept);
  std::vector<Vertex> core_m, core_m1;
  for (Vertex v : nm)
    if (kept_in[static_cast<std::size_t>(v)]) core_m.push_back(v);
  for (Vertex v : nm1)
    if (kept_in[static_cast<std::size_t>(v)]) core_m1.push_back(v);
  std::sort(core_m.begin(), core_m.end());
  std::sort(core_m1.begin(), core_m1.end());
  if (core_m.empty())
    throw HypothesisViolation("consecutive_paths", "the 2d/9-core between N_m and N_{m+1} is empty");
  r.core = make_bipartite_sub(b.graph, core_m, core_m1);

  // y z: the lexicographically first edge of g inside N'_m.
  auto in_core_m = membership(g.order(), core_m);
  for (Vertex u : core_m) {
    for (Vertex w : g.neighbors(u))
      if (w > u && in_core_m[static_cast<std::size_t>(w)]) {
        r.y = u;
        r.z = w;
        break;
      }
    if (r.y != -1) break;
  }
  if (r.y == -1)
    throw HypothesisViolation("consecutive_paths",
                              "N'_m (" + std::to_string(core_m.size()) + " vertices) is independent",
                              core_m);

  const std::size_t dp = r.core.min_degree();
  std::size_t window = 2 * dp - 2;
  if (opts.max_window) window = std::min(window, *opts.max_window);

  auto emit = [&](const Path& tail, std::size_t prefix, bool via_y) {
    // tree path x..w, then the prefix of `tail` walked back to its start
    Path p;
    p.verts = L.root_path(tail.verts[prefix]);
    for (std::size_t i = prefix; i-- > 0;) p.verts.push_back(tail.verts[i]);
    if (via_y) p.verts.push_back(r.y);
    r.paths.emplace(p.length(), std::move(p));
  };

  Path from_y = maximal_path_from(r.core.graph, r.y);
  auto without_y = membership(g.order(), r.core.members());
  without_y[static_cast<std::size_t>(r.y)] = 0;
  Path from_z = maximal_path_from(r.core.graph, r.z, &without_y);
  for (std::size_t t = 0; 2 * t <= window; ++t) {
    if (2 * t > from_y.length())
      throw HypothesisViolation("consecutive_paths", "maximal path from y is shorter than 2 delta(B') - 1");
    emit(from_y, 2 * t, false);
  }
  for (std::size_t t = 0; 2 * t + 1 <= window; ++t) {
    if (2 * t > from_z.length())
      throw HypothesisViolation("consecutive_paths", "maximal path from z avoiding y is shorter than 2 delta(B') - 3");
    emit(from_z, 2 * t, true);
  }
  return r;
}

}  // namespace pancyclic
