#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pancyclic/absorption.hpp"
#include "pancyclic/bipartite.hpp"
#include "pancyclic/bridge.hpp"
#include "pancyclic/consecutive_paths.hpp"
#include "pancyclic/cores.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/graph_io.hpp"
#include "pancyclic/long_cycles.hpp"
#include "pancyclic/random.hpp"
#include "pancyclic/report.hpp"
#include "pancyclic/trace.hpp"

namespace pancyclic {

struct PipelineResult {
  SpectrumReport report;
  PipelineTrace trace;
};

struct ShortCycleOptions {
  // Run the second-level layering even when the first level already covers
  // every target length.
  bool force_second_level = false;
  // Accept minimum degree 300k-1 (the induced core used by pancyclic_large_n).
  bool relaxed = false;
  // Certify only 3..min(floor(delta/81), max_length).
  std::optional<std::size_t> max_length;
};

namespace detail {

inline void add_all(SpectrumReport& r, const std::map<std::size_t, Cycle>& cycles, const std::string& tag) {
  for (const auto& [len, c] : cycles)
    if (len >= r.lo && len <= r.hi) r.add(c, tag);
}

// Rewrites the vertex ids of trace data recorded inside an induced subgraph.
inline nlohmann::ordered_json lift_trace_ids(const Subgraph& sub, const nlohmann::ordered_json& j, bool ids = false) {
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      out[it.key()] = lift_trace_ids(sub, it.value(), it.key().starts_with("set:") || it.key().starts_with("vertex:"));
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : j) out.push_back(lift_trace_ids(sub, e, ids));
    return out;
  }
  if (ids && j.is_number_integer()) return sub.original(j.get<Vertex>());
  return j;
}

inline SpectrumReport new_report(const Graph& g, int k, const std::string& theorem, std::optional<std::uint64_t> seed,
                                 std::size_t lo, std::size_t hi) {
  SpectrumReport r;
  r.hypothesis = {g.order(), k, g.min_degree(), theorem};
  r.graph_hash = graph_hash(g);
  r.seed = seed;
  r.lo = lo;
  r.hi = hi;
  return r;
}

// Cycles of length 3..hi in a graph of minimum degree d >= 300k; certificates
// are keyed by length and tagged with the stage that built them.
inline std::map<std::size_t, std::pair<Cycle, std::string>> short_cycles(const Graph& g, int k, RandomSource& rng,
                                                                         std::size_t hi, bool force_second,
                                                                         PipelineTrace& trace) {
  const std::size_t d = g.min_degree();
  std::map<std::size_t, std::pair<Cycle, std::string>> out;
  auto keep = [&](const std::map<std::size_t, Cycle>& cycles, const char* tag) {
    for (const auto& [len, c] : cycles)
      if (len <= hi && !out.count(len)) out.emplace(len, std::make_pair(c, std::string(tag)));
  };

  auto b = bipartite_subgraph(g);
  ConsecutivePathsOptions first_opts;
  first_opts.cycle_cap = hi;
  first_opts.max_window = 0;
  auto cp = consecutive_paths(g, b, 0, k, first_opts);
  const BfsLayering& L = cp.layering;
  {
    auto& s = trace.add("first-layering");
    s["vertex:x"] = 0;
    s["bipartite-min-degree"] = b.min_degree();
    s["m"] = cp.m;
    s["layer-m-size"] = L.layer(cp.m).size();
    s["set:N'_m"] = cp.core.part(Side::x);
    s["vertex:y"] = cp.y;
    s["vertex:z"] = cp.z;
  }
  keep(cp.cycles, "short-cycles/layers");
  const bool covered = out.size() + 2 >= hi;
  if (covered && !force_second) return out;

  // Trim N'_{m+1} to ceil(d/9) lowest neighbors per vertex of N'_m.
  const auto nm = cp.core.part(Side::x);
  const std::size_t per = (d + 8) / 9;
  std::vector<char> trimmed_in(g.order(), 0);
  for (Vertex u : nm) {
    const auto& nb = cp.core.graph.neighbors(u);
    if (nb.size() < per)
      throw HypothesisViolation("short_cycle_spectrum", "a vertex of N'_m has fewer than d/9 neighbors in N'_{m+1}",
                                {u});
    for (std::size_t i = 0; i < per; ++i) trimmed_in[static_cast<std::size_t>(nb[i])] = 1;
  }
  std::vector<Vertex> trimmed;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (trimmed_in[v]) trimmed.push_back(static_cast<Vertex>(v));

  std::vector<Vertex> p_set, q_set;
  int attempts = 0;
  for (attempts = 1; attempts <= kRetryCap; ++attempts) {
    p_set.clear();
    q_set.clear();
    std::vector<char> side(g.order(), 0);  // 1 = P, 2 = Q
    for (Vertex u : nm) {
      bool in_p = rng.coin();
      (in_p ? p_set : q_set).push_back(u);
      side[static_cast<std::size_t>(u)] = in_p ? 1 : 2;
    }
    bool ok = !p_set.empty() && !q_set.empty();
    for (std::size_t i = 0; i < trimmed.size() && ok; ++i) {
      std::size_t cp_cnt = 0, cq_cnt = 0;
      for (Vertex w : cp.core.graph.neighbors(trimmed[i])) {
        if (side[static_cast<std::size_t>(w)] == 1) ++cp_cnt;
        if (side[static_cast<std::size_t>(w)] == 2) ++cq_cnt;
      }
      ok = 36 * cp_cnt >= d && 36 * cq_cnt >= d;
    }
    if (ok) break;
  }
  if (attempts > kRetryCap) throw RandomnessFailure("short_cycle_spectrum", rng.seed(), kRetryCap);

  auto bstar = make_bipartite_sub(g, p_set, trimmed);
  const Vertex xs = p_set.front();
  ConsecutivePathsOptions second_opts;
  second_opts.cycle_cap = hi;
  second_opts.max_window = hi >= 2 ? hi - 2 : 0;
  auto cp2 = consecutive_paths(g, bstar, xs, k, second_opts);
  keep(cp2.cycles, "short-cycles/second-layers");

  Vertex ystar = cp2.y;
  auto in_q = membership(g.order(), q_set);
  if (bstar.side_of(cp2.y) != Side::x) {
    ystar = -1;
    for (Vertex w : g.neighbors(cp2.y))
      if (in_q[static_cast<std::size_t>(w)]) {
        ystar = w;
        break;
      }
    if (ystar == -1)
      throw HypothesisViolation("short_cycle_spectrum", "the second-level terminal has no neighbor in Q", {cp2.y});
  }
  auto w_path = L.tree_path(xs, ystar);
  {
    auto& s = trace.add("second-layering");
    s["trim-per-vertex"] = per;
    s["set:N'_{m+1} trimmed"] = trimmed;
    s["partition-attempts"] = attempts;
    s["set:P"] = p_set;
    s["set:Q"] = q_set;
    s["vertex:x*"] = xs;
    s["m*"] = cp2.m;
    s["layer-m*-size"] = cp2.layering.layer(cp2.m).size();
    s["vertex:y"] = cp2.y;
    s["vertex:y*"] = ystar;
    s["W-length"] = w_path.size() - 1;
  }

  std::map<std::size_t, Cycle> combined;
  for (const auto& [len, p] : cp2.paths) {
    std::vector<Vertex> full = p.verts;
    if (ystar != cp2.y) full.push_back(ystar);
    Cycle c;
    c.verts = w_path;  // x* ... y*
    for (std::size_t i = full.size() - 1; i-- > 1;) c.verts.push_back(full[i]);
    combined.emplace(c.length(), std::move(c));
  }
  keep(combined, "short-cycles/combined");
  return out;
}

}  // namespace detail

// Cycles of every length 3..floor(delta/81) for minimum degree delta >= 300k.
inline PipelineResult short_cycle_spectrum(const Graph& g, int k, RandomSource& rng,
                                           const ShortCycleOptions& opts = {}) {
  const std::size_t d = g.min_degree();
  const auto kk = static_cast<std::size_t>(k);
  if (k < 1) throw PreconditionError("short_cycle_spectrum needs k >= 1");
  const std::size_t need = opts.relaxed ? 300 * kk - 1 : 300 * kk;
  if (d < need)
    throw PreconditionError("short_cycle_spectrum needs minimum degree >= " + std::to_string(need) + ", got " +
                            std::to_string(d));
  std::size_t hi = d / 81;
  if (opts.max_length) hi = std::min(hi, *opts.max_length);

  PipelineResult out;
  out.trace.theorem = "short-cycles";
  out.trace.k = k;
  out.trace.seed = rng.seed();
  out.report = detail::new_report(g, k, "short-cycles", rng.seed(), 3, hi);
  {
    auto& o = out.trace.add("options");
    o["force-second-level"] = opts.force_second_level;
    o["relaxed"] = opts.relaxed;
    o["max-length"] = opts.max_length ? nlohmann::ordered_json(*opts.max_length) : nlohmann::ordered_json(nullptr);
  }
  for (auto& [len, cert] : detail::short_cycles(g, k, rng, hi, opts.force_second_level, out.trace))
    out.report.add(std::move(cert.first), std::move(cert.second));
  out.trace.add("result")["gaps"] = out.report.gaps();
  return out;
}

// Pancyclicity of a Hamiltonian graph with n >= 150k^3 (c a Hamilton cycle).
inline PipelineResult pancyclic_large_n(const Graph& g, const Cycle& c, int k, RandomSource& rng) {
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  if (k < 2) throw PreconditionError("pancyclic_large_n needs k >= 2");
  if (n < 150 * kk * kk * kk)
    throw PreconditionError("pancyclic_large_n needs n >= 150k^3 = " + std::to_string(150 * kk * kk * kk) +
                            ", got n = " + std::to_string(n));
  if (c.length() != n) throw PreconditionError("pancyclic_large_n needs a Hamilton cycle");
  if (auto v = verify_cycle(g, c); !v) throw PreconditionError("Hamilton cycle does not verify: " + v.failure);

  PipelineResult out;
  out.trace.theorem = "pan-n";
  out.trace.k = k;
  out.trace.seed = rng.seed();
  out.report = detail::new_report(g, k, "pan-n", rng.seed(), 3, n);

  // Shrinking sequence G_n ... G_{n-20k^2} with protected neighbor pairs.
  const std::size_t steps = 20 * kk * kk;
  const std::size_t s = kk * kk + kk + 1;
  const std::size_t width = 2 * kk + 1;
  std::vector<char> protect(n, 0);
  std::vector<Vertex> removed;
  auto& shrink = out.trace.add("shrink");
  shrink["steps"] = steps;
  shrink["pairs"] = nlohmann::ordered_json::array();
  Cycle cur = c;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t len = cur.length();
    std::vector<std::size_t> marks;
    for (std::size_t i = 0; i < len; ++i)
      if (protect[static_cast<std::size_t>(cur.verts[i])]) marks.push_back(i);
    std::vector<Interval> intervals;
    if (marks.empty()) {
      for (std::size_t st = 0; st + width <= len; st += width) intervals.push_back({st, 2 * kk});
    } else {
      for (std::size_t j = 0; j < marks.size(); ++j) {
        std::size_t from = marks[j] + 1;
        std::size_t to = j + 1 < marks.size() ? marks[j + 1] : marks[0] + len;  // exclusive
        for (std::size_t st = from; st + width <= to; st += width) intervals.push_back({st % len, 2 * kk});
      }
      std::sort(intervals.begin(), intervals.end(),
                [](const Interval& a, const Interval& b) { return a.start < b.start; });
    }
    if (intervals.size() < s)
      throw HypothesisViolation("pancyclic_large_n",
                                "only " + std::to_string(intervals.size()) + " free 2k-intervals, need " +
                                    std::to_string(s));
    intervals.resize(s);
    auto rem = remove_via_good_jump(g, cur, intervals, k, "pancyclic_large_n");
    const Vertex v = rem.removed;
    std::vector<Vertex> pair;
    auto on_cycle = membership(n, rem.cycle.verts);
    for (Vertex w : g.neighbors(v))
      if (on_cycle[static_cast<std::size_t>(w)] && pair.size() < 2) pair.push_back(w);
    for (Vertex w : pair) protect[static_cast<std::size_t>(w)] = 1;
    shrink["pairs"].push_back({{"vertex:v", v}, {"set:ab", pair}});
    removed.push_back(v);
    cur = std::move(rem.cycle);
  }
  shrink["set:S"] = removed;

  // Middle lengths through G' and S.
  auto bridge = bridge_cycles(g, cur, removed, k, "pancyclic_large_n");
  {
    auto& s2 = out.trace.add("bridge");
    s2["set:H"] = bridge.core;
    s2["vertex:x"] = bridge.x;
    s2["vertex:y"] = bridge.y;
    s2["vertex:a"] = bridge.a;
    s2["vertex:b"] = bridge.b;
    s2["m"] = bridge.m;
    s2["lo"] = bridge.lo;
    s2["hi"] = bridge.hi;
  }

  // Long lengths: delete one vertex at a time from the input cycle.
  std::map<std::size_t, Cycle> long_ones;
  const std::size_t floor_len = (n - steps) / 2;
  Cycle shrinking = c;
  long_ones.emplace(n, shrinking);
  while (shrinking.length() > floor_len) {
    shrinking = delete_one_vertex(g, shrinking, k).cycle;
    long_ones.emplace(shrinking.length(), shrinking);
  }
  out.trace.add("delete-one-vertex")["down-to"] = floor_len;

  // Short lengths inside an induced core of minimum degree 300k-1.
  const std::size_t short_hi = bridge_lower_bound(k);
  auto core = bounded_core(g, static_cast<int>(300 * kk - 1), k);
  auto sub = induced_subgraph(g, core);
  PipelineTrace inner;
  auto shorts = detail::short_cycles(sub.graph, k, rng, short_hi, false, inner);
  {
    auto& s3 = out.trace.add("short-core");
    s3["set:core"] = core;
    s3["core-min-degree"] = sub.graph.min_degree();
    nlohmann::ordered_json nested = nlohmann::ordered_json::array();
    for (const auto& st : inner.stages)
      nested.push_back({{"stage", st.name}, {"data", detail::lift_trace_ids(sub, st.data)}});
    s3["inner-stages"] = nested;
  }

  for (auto& [len, cert] : shorts) {
    Cycle lifted{sub.lift(cert.first.verts)};
    out.report.add(std::move(lifted), "pan-n/" + cert.second);
  }
  detail::add_all(out.report, bridge.cycles, "pan-n/bridge");
  detail::add_all(out.report, long_ones, "pan-n/delete-one-vertex");
  out.trace.add("result")["gaps"] = out.report.gaps();
  return out;
}

struct IntermediateResult {
  std::string subcase;  // "direct", "core" or "walk"
  std::map<std::size_t, Cycle> cycles;
};

// The part of the minimum-degree argument that runs once absorption stops:
// G'' (Hamilton cycle c_second) is G' (Hamilton cycle c_prime) minus the
// stuck set S and y0, and D is everything outside G'. Produces cycles for the
// intermediate lengths through x in S, a terminal y (or z beyond it in D),
// and an arc of c_second.
inline IntermediateResult intermediate_after_absorption(const Graph& g, const Cycle& c_prime, const Cycle& c_second,
                                                        const std::vector<Vertex>& s_set,
                                                        const std::vector<Vertex>& d_set, int k,
                                                        PipelineTrace& trace) {
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  auto in_second = membership(n, c_second.verts);
  auto in_d = membership(n, d_set);
  auto& rec = trace.add("case-b");
  rec["set:S"] = s_set;

  std::vector<Vertex> sorted_s = s_set;
  std::sort(sorted_s.begin(), sorted_s.end());
  Vertex x = -1, a = -1;
  for (Vertex v : sorted_s) {
    for (Vertex w : g.neighbors(v))
      if (in_second[static_cast<std::size_t>(w)]) {
        a = w;
        break;
      }
    if (a != -1) {
      x = v;
      break;
    }
  }
  if (x == -1) throw HypothesisViolation("case-b", "no vertex of S has a neighbor in G''", sorted_s);

  auto b = bipartite_subgraph(g, sorted_s);
  ConsecutivePathsOptions opts;
  opts.with_cycles = false;
  opts.max_window = 4 * kk;
  auto cp = consecutive_paths(g, b, x, k, opts);
  rec["vertex:x"] = x;
  rec["vertex:a"] = a;
  rec["vertex:y"] = cp.y;
  rec["m"] = cp.m;

  auto second_neighbor = [&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (in_second[static_cast<std::size_t>(w)] && w != a) return w;
    return Vertex{-1};
  };
  auto close_all = [&](Vertex b_anchor, const std::map<std::size_t, Path>& paths, const char* sub) {
    IntermediateResult r;
    r.subcase = sub;
    ArcCloser closer{a, b_anchor, 2 * kk, ShorteningChain(g, longer_arc(c_second, a, b_anchor), k), &paths};
    const std::size_t lo = paths.begin()->first + 2 * kk + 1;
    const std::size_t hi = c_second.length() / 2;
    for (std::size_t l = lo; l <= hi; ++l) {
      auto c = closer.close(l);
      if (!c) throw HypothesisViolation("case-b", "no closing combination for length " + std::to_string(l));
      r.cycles.emplace(l, std::move(*c));
    }
    rec["subcase"] = sub;
    rec["vertex:b"] = b_anchor;
    rec["lo"] = lo;
    rec["hi"] = hi;
    return r;
  };

  if (Vertex bb = second_neighbor(cp.y); bb != -1) return close_all(bb, cp.paths, "direct");

  // y has at most one neighbor in G'': hop into D.
  Vertex y1 = -1;
  for (Vertex w : g.neighbors(cp.y))
    if (in_d[static_cast<std::size_t>(w)]) {
      y1 = w;
      break;
    }
  if (y1 == -1) throw HypothesisViolation("case-b", "the terminal y has no neighbor in D", {cp.y});
  rec["vertex:y'"] = y1;

  // Component Z of G[D] around y', explored breadth first in ascending id order.
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{y1};
  depth[static_cast<std::size_t>(y1)] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex w : g.neighbors(order[head]))
      if (in_d[static_cast<std::size_t>(w)] && depth[static_cast<std::size_t>(w)] == -1) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(order[head])] + 1;
        parent[static_cast<std::size_t>(w)] = order[head];
        order.push_back(w);
      }
  std::vector<Vertex> zset = order;
  std::sort(zset.begin(), zset.end());
  rec["set:Z"] = zset;

  auto zcore = min_degree_core(g, DegreeThreshold{20 * static_cast<std::int64_t>(k), 1}, zset);
  if (!zcore.empty()) {
    auto br = bridge_cycles(g, c_prime, zcore, k, "case-b");
    rec["subcase"] = "core";
    rec["set:Z'"] = zcore;
    return {"core", std::move(br.cycles)};
  }

  Vertex z = -1;
  for (Vertex v : order) {
    std::size_t cnt = 0;
    for (Vertex w : g.neighbors(v))
      if (in_second[static_cast<std::size_t>(w)]) ++cnt;
    if (cnt >= 2) {
      z = v;
      break;
    }
  }
  if (z == -1 || depth[static_cast<std::size_t>(z)] > k)
    throw HypothesisViolation("case-b", "no vertex within distance k of y' in Z has two neighbors in G''", zset);
  rec["vertex:z"] = z;
  rec["z-depth"] = depth[static_cast<std::size_t>(z)];

  std::vector<Vertex> hop;  // y' ... z
  for (Vertex v = z; v != -1; v = parent[static_cast<std::size_t>(v)]) hop.push_back(v);
  std::reverse(hop.begin(), hop.end());
  std::map<std::size_t, Path> xz;
  for (const auto& [len, p] : cp.paths) {
    Path q = p;
    q.verts.insert(q.verts.end(), hop.begin(), hop.end());
    xz.emplace(q.length(), std::move(q));
  }
  return close_all(second_neighbor(z), xz, "walk");
}

// Pancyclicity of a Hamiltonian graph with minimum degree >= 600k.
inline PipelineResult pancyclic_min_degree(const Graph& g, const Cycle& c, int k, RandomSource& rng) {
  const std::size_t n = g.order();
  const auto kk = static_cast<std::size_t>(k);
  if (k < 1) throw PreconditionError("pancyclic_min_degree needs k >= 1");
  if (g.min_degree() < 600 * kk)
    throw PreconditionError("pancyclic_min_degree needs minimum degree >= 600k = " + std::to_string(600 * kk));
  if (c.length() != n) throw PreconditionError("pancyclic_min_degree needs a Hamilton cycle");
  if (auto v = verify_cycle(g, c); !v) throw PreconditionError("Hamilton cycle does not verify: " + v.failure);

  if (n >= 150 * kk * kk * kk) {
    auto r = pancyclic_large_n(g, c, k, rng);
    r.report.hypothesis.theorem = "pan-mindeg";
    r.trace.theorem = "pan-mindeg";
    r.trace.stages.insert(r.trace.stages.begin(), {"dispatch", {{"branch", "large-n"}}});
    return r;
  }

  PipelineResult out;
  out.trace.theorem = "pan-mindeg";
  out.trace.k = k;
  out.trace.seed = rng.seed();
  out.trace.add("dispatch")["branch"] = "k>=3";
  out.report = detail::new_report(g, k, "pan-mindeg", rng.seed(), 3, n);

  const std::size_t short_hi = g.min_degree() / 81;
  auto shorts = detail::short_cycles(g, k, rng, short_hi, false, out.trace);
  auto longs = long_cycles(g, c, k, rng);
  {
    auto& s = out.trace.add("long-cycles");
    s["set:X"] = longs.x_set;
    s["partition-attempts"] = longs.attempts;
    s["lo"] = longs.cycles.begin()->first;
  }

  // Half-half partition.
  std::vector<Vertex> xs, ys;
  int attempts = 0;
  for (attempts = 1; attempts <= kRetryCap; ++attempts) {
    xs.clear();
    ys.clear();
    for (std::size_t v = 0; v < n; ++v) (rng.coin() ? xs : ys).push_back(static_cast<Vertex>(v));
    bool ok = 3 * xs.size() >= n && 3 * ys.size() >= n;
    auto in_x = membership(n, xs);
    for (std::size_t v = 0; v < n && ok; ++v) {
      std::size_t cx = count_neighbors_in(g, static_cast<Vertex>(v), in_x);
      ok = cx >= 200 * kk && g.degree(static_cast<Vertex>(v)) - cx >= 200 * kk;
    }
    if (ok) break;
  }
  if (attempts > kRetryCap) throw RandomnessFailure("pancyclic_min_degree", rng.seed(), kRetryCap);
  auto in_y = membership(n, ys);
  {
    auto& s = out.trace.add("half-partition");
    s["attempts"] = attempts;
    s["set:X"] = xs;
  }

  // Shrink G' while a whole jump interior minus y0 can be absorbed back.
  Cycle cprime = c;
  std::size_t rounds = 0;
  std::vector<Vertex> stuck;
  Cycle csecond;
  while (true) {
    const std::size_t len = cprime.length();
    std::vector<std::size_t> ypos;
    for (std::size_t i = 0; i < len; ++i)
      if (in_y[static_cast<std::size_t>(cprime.verts[i])]) ypos.push_back(i);
    if (ypos.size() <= 4 * kk) break;

    // Window holding exactly 2k+1 vertices of Y, shortest first.
    const std::size_t cnt = ypos.size();
    std::size_t best = 0, best_len = len + 1;
    for (std::size_t j = 0; j < cnt; ++j) {
      std::size_t from = ypos[j], to = ypos[(j + 2 * kk) % cnt];
      std::size_t w = (to + len - from) % len;
      if (w < best_len) {
        best_len = w;
        best = j;
      }
    }
    std::vector<std::size_t> alt;
    for (std::size_t t = 0; t <= kk; ++t) alt.push_back(ypos[(best + 2 * t) % cnt]);
    std::optional<Jump> jump;
    for (std::size_t i = 0; i < alt.size() && !jump; ++i)
      for (std::size_t j = i + 1; j < alt.size(); ++j)
        if (g.has_edge(cprime.verts[alt[i]], cprime.verts[alt[j]])) {
          jump = Jump{Interval{alt[i], (alt[j] + len - alt[i]) % len}};
          break;
        }
    if (!jump) {
      std::vector<Vertex> w;
      for (std::size_t p : alt) w.push_back(cprime.verts[p]);
      throw HypothesisViolation("pancyclic_min_degree", "alternate Y vertices of a window are independent", w);
    }
    auto interior = jump->interior(cprime);
    Vertex y0 = -1;
    for (Vertex v : interior)
      if (in_y[static_cast<std::size_t>(v)] && (y0 == -1 || v < y0)) y0 = v;
    std::vector<Vertex> pending;
    for (Vertex v : interior)
      if (v != y0) pending.push_back(v);
    std::sort(pending.begin(), pending.end());

    Cycle work = contract_jump(cprime, *jump);
    while (!pending.empty()) {
      auto on = membership(n, work.verts);
      auto it = std::find_if(pending.begin(), pending.end(), [&](Vertex v) {
        return count_neighbors_in(g, v, on) >= kk + 1;
      });
      if (it == pending.end()) break;
      work = absorb_vertex(g, work, *it, k);
      pending.erase(it);
    }
    if (pending.empty()) {
      cprime = std::move(work);
      ++rounds;
      continue;
    }
    stuck = pending;
    csecond = std::move(work);
    auto& s = out.trace.add("stuck");
    s["vertex:y0"] = y0;
    s["set:S"] = stuck;
    break;
  }
  std::vector<Vertex> dset;
  {
    auto on = membership(n, cprime.verts);
    for (std::size_t v = 0; v < n; ++v)
      if (!on[v]) dset.push_back(static_cast<Vertex>(v));
  }
  {
    auto& s = out.trace.add("minimality");
    s["rounds"] = rounds;
    s["G'-order"] = cprime.length();
    s["set:D"] = dset;
  }

  std::map<std::size_t, Cycle> middle;
  std::string tag;
  if (stuck.empty()) {
    auto br = bridge_cycles(g, cprime, dset, k, "pancyclic_min_degree");
    auto& s = out.trace.add("case-a");
    s["set:H"] = br.core;
    s["vertex:x"] = br.x;
    s["vertex:y"] = br.y;
    s["vertex:a"] = br.a;
    s["vertex:b"] = br.b;
    s["m"] = br.m;
    s["lo"] = br.lo;
    s["hi"] = br.hi;
    middle = std::move(br.cycles);
    tag = "pan-mindeg/case-a";
  } else {
    auto r = intermediate_after_absorption(g, cprime, csecond, stuck, dset, k, out.trace);
    middle = std::move(r.cycles);
    tag = "pan-mindeg/case-b-" + r.subcase;
  }

  for (auto& [len, cert] : shorts) out.report.add(std::move(cert.first), "pan-mindeg/" + cert.second);
  detail::add_all(out.report, middle, tag);
  detail::add_all(out.report, longs.cycles, "pan-mindeg/long-cycles");
  out.trace.add("result")["gaps"] = out.report.gaps();
  return out;
}

// Reruns the pipeline named in a trace with its recorded k and seed.
inline PipelineResult replay(const Graph& g, const std::optional<Cycle>& c, const PipelineTrace& t) {
  if (!t.seed) throw InputError("trace has no seed");
  RandomSource rng(*t.seed);
  if (t.theorem == "short-cycles") {
    ShortCycleOptions opts;
    if (const auto* o = t.find("options")) {
      opts.force_second_level = o->data.value("force-second-level", false);
      opts.relaxed = o->data.value("relaxed", false);
      if (o->data.contains("max-length") && !o->data["max-length"].is_null())
        opts.max_length = o->data["max-length"].get<std::size_t>();
    }
    return short_cycle_spectrum(g, t.k, rng, opts);
  }
  if (!c) throw InputError("pipeline " + t.theorem + " needs a Hamilton cycle");
  if (t.theorem == "pan-n") return pancyclic_large_n(g, *c, t.k, rng);
  if (t.theorem == "pan-mindeg") return pancyclic_min_degree(g, *c, t.k, rng);
  throw InputError("unknown pipeline " + t.theorem);
}

}  // namespace pancyclic
