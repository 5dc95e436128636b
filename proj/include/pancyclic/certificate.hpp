#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic {

// Vertex sequence whose consecutive entries are adjacent.
struct Path {
  std::vector<Vertex> verts;

  std::size_t length() const noexcept { return verts.empty() ? 0 : verts.size() - 1; }
  Vertex front() const { return verts.front(); }
  Vertex back() const { return verts.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

// Closed vertex sequence; the edge back->front is implicit.
struct Cycle {
  std::vector<Vertex> verts;

  std::size_t length() const noexcept { return verts.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Outcome of a certificate check: ok, or the first failure found.
struct Verdict {
  bool ok = true;
  std::string failure;

  explicit operator bool() const noexcept { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline Verdict verify_walk(const Graph& g, std::span<const Vertex> verts, bool closed) {
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Vertex v = verts[i];
    if (!g.contains(v))
      return Verdict::fail("vertex " + std::to_string(v) + " at position " + std::to_string(i) +
                           " is out of range");
    if (seen[static_cast<std::size_t>(v)])
      return Verdict::fail("vertex " + std::to_string(v) + " repeats at position " +
                           std::to_string(i));
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (!g.has_edge(verts[i], verts[i + 1]))
      return Verdict::fail(std::to_string(verts[i]) + "-" + std::to_string(verts[i + 1]) +
                           " is not an edge (position " + std::to_string(i) + ")");
  if (closed && !g.has_edge(verts.back(), verts.front()))
    return Verdict::fail("closing pair " + std::to_string(verts.back()) + "-" +
                         std::to_string(verts.front()) + " is not an edge");
  return Verdict::pass();
}

}  // namespace detail

inline Verdict verify_cycle(const Graph& g, const Cycle& c) {
  if (c.verts.size() < 3) return Verdict::fail("cycle has fewer than 3 vertices");
  return detail::verify_walk(g, c.verts, true);
}

inline Verdict verify_path(const Graph& g, const Path& p) {
  if (p.verts.empty()) return Verdict::fail("empty path");
  return detail::verify_walk(g, p.verts, false);
}

// Read-only view of a path or cycle used as the host of intervals.
struct WalkView {
  std::span<const Vertex> verts;
  bool cyclic = false;

  WalkView(const Path& p) : verts(p.verts), cyclic(false) {}    // NOLINT
  WalkView(const Cycle& c) : verts(c.verts), cyclic(true) {}    // NOLINT
  WalkView(std::span<const Vertex> v, bool closed) : verts(v), cyclic(closed) {}

  std::size_t length() const noexcept {
    return cyclic ? verts.size() : (verts.empty() ? 0 : verts.size() - 1);
  }
  std::size_t wrap(std::size_t i) const noexcept { return cyclic ? i % verts.size() : i; }
  Vertex at(std::size_t i) const noexcept { return verts[wrap(i)]; }
};

// t+1 consecutive points of a host walk starting at position `start`
// (positions wrap on cycles).
struct Interval {
  std::size_t start = 0;
  std::size_t length = 0;

  bool fits(const WalkView& host) const noexcept {
    return host.cyclic ? (length < host.verts.size() && start < host.verts.size())
                       : start + length <= host.length();
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Interval of length >= 2 whose endpoints are adjacent in the host graph.
struct Jump {
  Interval interval;

  std::size_t length() const noexcept { return interval.length; }
  Vertex first(const WalkView& host) const { return host.at(interval.start); }
  Vertex last(const WalkView& host) const { return host.at(interval.start + interval.length); }

  // Interior points (the endpoint edge bypasses them).
  std::vector<Vertex> interior(const WalkView& host) const {
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < interval.length; ++i) out.push_back(host.at(interval.start + i));
    return out;
  }

  friend bool operator==(const Jump&, const Jump&) = default;
};

// Replaces the portion of a cycle along `j` by its endpoint edge.
inline Cycle contract_jump(const Cycle& c, const Jump& j) {
  const std::size_t n = c.verts.size();
  std::vector<char> drop(n, 0);
  for (std::size_t i = 1; i < j.interval.length; ++i) drop[(j.interval.start + i) % n] = 1;
  Cycle out;
  out.verts.reserve(n - (j.interval.length - 1));
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) out.verts.push_back(c.verts[i]);
  return out;
}

}  // namespace pancyclic
