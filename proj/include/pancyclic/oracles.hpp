#pragma once

// Exact exponential-time ground truth for small graphs. Every search is
// deterministic: branching order and tie-breaks depend only on the input, and
// budget aborts are reported as an explicit status, never as an answer.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/graph_io.hpp"
#include "pancyclic/report.hpp"

namespace pancyclic {

struct OracleBudget {
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  std::optional<double> seconds;
};

enum class SearchStatus { found, absent, aborted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::aborted: return "aborted";
  }
  return "?";
}

class BudgetMeter {
 public:
  explicit BudgetMeter(const OracleBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; false once either limit is exceeded.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.node_limit) {
      exhausted_ = true;
      return false;
    }
    if (budget_.seconds && (nodes_ & 0xFFF) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > *budget_.seconds) exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// ---------------------------------------------------------------------------
// Independence number

struct IndependenceResult {
  SearchStatus status = SearchStatus::found;  // found or aborted
  std::size_t value = 0;                      // exact when found, best lower bound otherwise
  std::size_t upper_bound = 0;
  std::vector<Vertex> witness;                // an independent set of size `value`
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return status == SearchStatus::found; }
};

namespace detail {

class IndependenceSearch {
 public:
  IndependenceSearch(const Graph& g, const OracleBudget& budget) : g_(g), meter_(budget) {}

  IndependenceResult run() {
    VertexBitset cand(g_.order());
    for (std::size_t v = 0; v < g_.order(); ++v) cand.set(v);
    IndependenceResult r;
    r.upper_bound = clique_cover(cand);
    std::vector<Vertex> chosen;
    search(cand, chosen);
    r.value = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = meter_.nodes();
    if (meter_.exhausted()) {
      r.status = SearchStatus::aborted;
    } else {
      r.upper_bound = r.value;
    }
    return r;
  }

 private:
  // Greedy partition of `cand` into cliques; their count bounds alpha.
  std::size_t clique_cover(const VertexBitset& cand) const {
    VertexBitset rest = cand;
    std::size_t cliques = 0;
    for (std::size_t v = rest.first(); v < rest.universe(); v = rest.first()) {
      rest.reset(v);
      VertexBitset common = rest;
      common &= g_.neighbor_bits(static_cast<Vertex>(v));
      for (std::size_t u = common.first(); u < common.universe(); u = common.first()) {
        rest.reset(u);
        common.reset(u);
        common &= g_.neighbor_bits(static_cast<Vertex>(u));
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexBitset& cand, std::vector<Vertex>& chosen) {
    if (!meter_.tick()) return;
    if (cand.none()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + clique_cover(cand) <= best_.size()) return;

    // Branch vertex: maximum degree inside cand, lowest id on ties.
    std::size_t pick = cand.universe(), pick_deg = 0;
    for (std::size_t v = cand.first(); v < cand.universe(); v = cand.next(v + 1)) {
      std::size_t d = cand.intersection_count(g_.neighbor_bits(static_cast<Vertex>(v)));
      if (pick == cand.universe() || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick_deg == 0) {
      std::size_t before = chosen.size();
      for (std::size_t v = cand.first(); v < cand.universe(); v = cand.next(v + 1))
        chosen.push_back(static_cast<Vertex>(v));
      if (chosen.size() > best_.size()) best_ = chosen;
      chosen.resize(before);
      return;
    }

    VertexBitset with = cand;
    with.subtract(g_.neighbor_bits(static_cast<Vertex>(pick)));
    with.reset(pick);
    chosen.push_back(static_cast<Vertex>(pick));
    search(with, chosen);
    chosen.pop_back();
    if (meter_.exhausted()) return;

    cand.reset(pick);
    search(cand, chosen);
    cand.set(pick);
  }

  const Graph& g_;
  BudgetMeter meter_;
  std::vector<Vertex> best_;
};

}  // namespace detail

// Exact alpha(g) by branch and bound: branch on a maximum-degree vertex
// (include it and drop its closed neighborhood, or exclude it), pruning with a
// greedy clique-cover bound.
inline IndependenceResult independence_number(const Graph& g, const OracleBudget& budget = {}) {
  return detail::IndependenceSearch(g, budget).run();
}

// ---------------------------------------------------------------------------
// Vertex connectivity

namespace detail {

// Max number of internally disjoint s-t paths (s, t non-adjacent), stopping
// once `cap` is reached. Unit vertex capacities via in/out splitting.
inline std::size_t local_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  const std::size_t n = g.order();
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n);
  auto add = [&](std::size_t a, std::size_t b, int c) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, c});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  const int inf = static_cast<int>(n) + 1;
  for (std::size_t v = 0; v < n; ++v)
    add(2 * v, 2 * v + 1, (static_cast<Vertex>(v) == s || static_cast<Vertex>(v) == t) ? inf : 1);
  for (const auto& [u, v] : g.edges()) {
    add(2 * static_cast<std::size_t>(u) + 1, 2 * static_cast<std::size_t>(v), inf);
    add(2 * static_cast<std::size_t>(v) + 1, 2 * static_cast<std::size_t>(u), inf);
  }
  const std::size_t src = 2 * static_cast<std::size_t>(s) + 1;
  const std::size_t dst = 2 * static_cast<std::size_t>(t);
  std::size_t flow = 0;
  std::vector<std::size_t> via(2 * n);
  while (flow < cap) {
    std::vector<char> seen(2 * n, 0);
    std::deque<std::size_t> q{src};
    seen[src] = 1;
    while (!q.empty() && !seen[dst]) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t id : out[a])
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          via[arcs[id].to] = id;
          q.push_back(arcs[id].to);
        }
    }
    if (!seen[dst]) break;
    for (std::size_t v = dst; v != src;) {
      std::size_t id = via[v];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      v = arcs[id ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

}  // namespace detail

// Exact kappa(g) by Even's scheme over max-flow local connectivities.
// Complete graphs return n-1 by convention; graphs with at most one vertex
// return 0.
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!detail::is_connected(g)) return 0;
  std::size_t best = g.min_degree();
  for (std::size_t i = 0; i <= best && i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        best = std::min(best, detail::local_connectivity(g, static_cast<Vertex>(i),
                                                          static_cast<Vertex>(j), best));
  return best;
}

// ---------------------------------------------------------------------------
// Cycle search

struct CycleSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<Cycle> cycle;
  std::uint64_t nodes = 0;  // search nodes spent; for absences, proof that the search completed
  bool used_meet_in_middle = false;
};

struct CycleSearchOptions {
  // DFS nodes after which the meet-in-the-middle search takes over.
  std::uint64_t mitm_threshold = std::uint64_t{1} << 22;
  bool force_meet_in_middle = false;
};

namespace detail {

// BFS distances from s inside vertices >= s.
inline std::vector<int> anchored_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(g.order(), std::numeric_limits<int>::max());
  std::deque<Vertex> q{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (w > s && dist[static_cast<std::size_t>(w)] == std::numeric_limits<int>::max()) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

// Cycles are enumerated with their minimum vertex s as anchor; every other
// vertex exceeds s. A partial path is cut when its end cannot return to s in
// the remaining number of steps.
class CycleDfs {
 public:
  CycleDfs(const Graph& g, std::size_t len, BudgetMeter& meter, std::uint64_t threshold)
      : g_(g), len_(len), meter_(meter), threshold_(threshold), on_path_(g.order(), 0) {}

  enum class Outcome { found, absent, aborted, handoff };

  Outcome run() {
    for (std::size_t s = 0; s + len_ <= g_.order(); ++s) {
      anchor_ = static_cast<Vertex>(s);
      dist_ = anchored_distances(g_, anchor_);
      path_.assign(1, anchor_);
      on_path_[s] = 1;
      bool hit = extend();
      on_path_[s] = 0;
      if (hit) return Outcome::found;
      if (meter_.exhausted()) return Outcome::aborted;
      if (handoff_) return Outcome::handoff;
    }
    return Outcome::absent;
  }

  Cycle cycle() const { return Cycle{path_}; }

 private:
  bool extend() {
    if (!meter_.tick()) return false;
    if (meter_.nodes() > threshold_) {
      handoff_ = true;
      return false;
    }
    const Vertex cur = path_.back();
    if (path_.size() == len_) return g_.has_edge(cur, anchor_);
    const std::size_t remaining_after = len_ - path_.size();  // edges left once we step
    for (Vertex w : g_.neighbors(cur)) {
      if (w <= anchor_ || on_path_[static_cast<std::size_t>(w)]) continue;
      if (static_cast<std::size_t>(dist_[static_cast<std::size_t>(w)]) > remaining_after) continue;
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      if (extend()) return true;
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
      if (meter_.exhausted() || handoff_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t len_;
  BudgetMeter& meter_;
  std::uint64_t threshold_;
  Vertex anchor_ = 0;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  bool handoff_ = false;
};

// Splits a cycle at its minimum vertex s and the vertex w opposite to it:
// two internally disjoint s-w paths of lengths floor(len/2) and ceil(len/2).
class CycleMeetInMiddle {
 public:
  CycleMeetInMiddle(const Graph& g, std::size_t len, BudgetMeter& meter)
      : g_(g), len_(len), meter_(meter), short_(len / 2), long_(len - len / 2) {}

  std::optional<Cycle> run() {
    for (std::size_t s = 0; s + len_ <= g_.order(); ++s) {
      anchor_ = static_cast<Vertex>(s);
      halves_short_.assign(g_.order(), {});
      halves_long_.assign(g_.order(), {});
      path_.assign(1, anchor_);
      on_path_.assign(g_.order(), 0);
      on_path_[s] = 1;
      enumerate();
      if (meter_.exhausted()) return std::nullopt;
      for (std::size_t w = s + 1; w < g_.order(); ++w)
        for (const auto& a : halves_short_[w])
          for (const auto& b : halves_long_[w]) {
            if (!meter_.tick()) return std::nullopt;
            if (a.interior.intersects(b.interior)) continue;
            Cycle c{a.verts};
            for (std::size_t i = b.verts.size() - 2; i >= 1; --i) c.verts.push_back(b.verts[i]);
            return c;
          }
    }
    return std::nullopt;
  }

 private:
  struct Half {
    std::vector<Vertex> verts;
    VertexBitset interior;
  };

  void record() {
    const std::size_t edges = path_.size() - 1;
    if (edges != short_ && edges != long_) return;
    Half h{path_, VertexBitset(g_.order())};
    for (std::size_t i = 1; i + 1 < path_.size(); ++i) h.interior.set(static_cast<std::size_t>(path_[i]));
    auto end = static_cast<std::size_t>(path_.back());
    if (edges == short_) halves_short_[end].push_back(h);
    if (edges == long_) halves_long_[end].push_back(std::move(h));
  }

  void enumerate() {
    if (!meter_.tick()) return;
    record();
    if (path_.size() - 1 == long_) return;
    for (Vertex w : g_.neighbors(path_.back())) {
      if (w <= anchor_ || on_path_[static_cast<std::size_t>(w)]) continue;
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      enumerate();
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
      if (meter_.exhausted()) return;
    }
  }

  const Graph& g_;
  std::size_t len_;
  BudgetMeter& meter_;
  std::size_t short_, long_;
  Vertex anchor_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  std::vector<std::vector<Half>> halves_short_, halves_long_;
};

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, BudgetMeter& meter)
      : g_(g), meter_(meter), n_(g.order()), visited_(g.order(), 0) {}

  std::optional<Cycle> run() {
    if (n_ < 3) return std::nullopt;
    for (std::size_t v = 0; v < n_; ++v)
      if (g_.degree(static_cast<Vertex>(v)) < 2) {
        meter_.tick();
        return std::nullopt;
      }
    path_.push_back(0);
    visited_[0] = 1;
    if (extend()) return Cycle{path_};
    return std::nullopt;
  }

 private:
  // Neighbors of u that are still usable as cycle neighbors.
  std::size_t available_degree(Vertex u, Vertex cur) const {
    std::size_t c = 0;
    for (Vertex w : g_.neighbors(u))
      if (!visited_[static_cast<std::size_t>(w)] || w == cur || w == 0) ++c;
    return c;
  }

  // Unvisited vertices together with cur and 0 must induce a connected graph
  // and every unvisited vertex needs two usable neighbors.
  bool feasible(Vertex cur) const {
    std::size_t unvisited = n_ - path_.size();
    if (unvisited == 0) return true;
    for (std::size_t u = 0; u < n_; ++u)
      if (!visited_[u] && available_degree(static_cast<Vertex>(u), cur) < 2) return false;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{cur};
    seen[static_cast<std::size_t>(cur)] = 1;
    std::size_t reached = 0;
    bool touches_start = false;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (w == 0 && v != cur) touches_start = true;
        if (visited_[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == unvisited && touches_start;
  }

  bool extend() {
    if (!meter_.tick()) return false;
    const Vertex cur = path_.back();
    if (path_.size() == n_) return g_.has_edge(cur, 0);
    if (!feasible(cur)) return false;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (Vertex w : g_.neighbors(cur))
      if (!visited_[static_cast<std::size_t>(w)]) order.emplace_back(available_degree(w, cur), w);
    std::sort(order.begin(), order.end());
    for (const auto& [deg, w] : order) {
      path_.push_back(w);
      visited_[static_cast<std::size_t>(w)] = 1;
      if (extend()) return true;
      visited_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::size_t n_;
  std::vector<char> visited_;
  std::vector<Vertex> path_;
};

}  // namespace detail

// Backtracking from vertex 0 with degree-sorted branching, pruned by
// connectivity of the unvisited part and a two-usable-neighbors test.
inline CycleSearchResult find_hamilton_cycle(const Graph& g, const OracleBudget& budget = {}) {
  BudgetMeter meter(budget);
  auto c = detail::HamiltonSearch(g, meter).run();
  CycleSearchResult r;
  r.nodes = meter.nodes();
  if (c) {
    r.status = SearchStatus::found;
    r.cycle = std::move(c);
  } else {
    r.status = meter.exhausted() ? SearchStatus::aborted : SearchStatus::absent;
  }
  return r;
}

// Cycle of exactly `len` vertices, or an exhaustive absence proof.
inline CycleSearchResult find_cycle_of_length(const Graph& g, std::size_t len,
                                              const OracleBudget& budget = {},
                                              const CycleSearchOptions& opts = {}) {
  if (len < 3 || len > g.order())
    throw InputError("cycle length " + std::to_string(len) + " outside [3, " +
                     std::to_string(g.order()) + "]");
  if (len == g.order() && !opts.force_meet_in_middle) return find_hamilton_cycle(g, budget);

  BudgetMeter meter(budget);
  CycleSearchResult r;
  bool mitm = opts.force_meet_in_middle;
  if (!mitm) {
    detail::CycleDfs dfs(g, len, meter, opts.mitm_threshold);
    switch (dfs.run()) {
      case detail::CycleDfs::Outcome::found:
        r.status = SearchStatus::found;
        r.cycle = dfs.cycle();
        break;
      case detail::CycleDfs::Outcome::absent: r.status = SearchStatus::absent; break;
      case detail::CycleDfs::Outcome::aborted: r.status = SearchStatus::aborted; break;
      case detail::CycleDfs::Outcome::handoff: mitm = true; break;
    }
  }
  if (mitm) {
    r.used_meet_in_middle = true;
    auto c = detail::CycleMeetInMiddle(g, len, meter).run();
    if (c) {
      r.status = SearchStatus::found;
      r.cycle = std::move(c);
    } else {
      r.status = meter.exhausted() ? SearchStatus::aborted : SearchStatus::absent;
    }
  }
  r.nodes = meter.nodes();
  return r;
}

// Runs find_cycle_of_length for every length in [lo, hi], each with its own
// copy of `budget`. Aborts are recorded in the report, not thrown.
inline SpectrumReport cycle_spectrum(const Graph& g, std::size_t lo, std::size_t hi,
                                     const OracleBudget& budget = {},
                                     const CycleSearchOptions& opts = {}) {
  if (lo < 3 || hi > g.order() || lo > hi)
    throw InputError("spectrum range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "] not inside [3, " + std::to_string(g.order()) + "]");
  SpectrumReport rep;
  rep.hypothesis = {g.order(), 0, g.min_degree(), "oracle"};
  rep.graph_hash = graph_hash(g);
  rep.lo = lo;
  rep.hi = hi;
  for (std::size_t len = lo; len <= hi; ++len) {
    auto r = find_cycle_of_length(g, len, budget, opts);
    switch (r.status) {
      case SearchStatus::found: rep.add(std::move(*r.cycle), "oracle"); break;
      case SearchStatus::absent: rep.absent[len] = r.nodes; break;
      case SearchStatus::aborted: rep.aborted[len] = r.nodes; break;
    }
  }
  return rep;
}

}  // namespace pancyclic
