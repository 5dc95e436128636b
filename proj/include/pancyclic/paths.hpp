#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic {

// Jump of length at most 2k inside an interval of length >= 2k. Scans the
// points at offsets 0, 2, ..., 2k from the interval start and takes the
// lexicographically first adjacent pair among them. With alpha <= k those
// k+1 points cannot be independent; if they are, they are the witness.
inline Jump find_jump(const Graph& g, const WalkView& host, const Interval& iv, int k) {
  if (k < 1) throw PreconditionError("find_jump needs k >= 1");
  const auto span2k = static_cast<std::size_t>(2 * k);
  if (iv.length < span2k || !iv.fits(host))
    throw PreconditionError("find_jump needs an interval of length >= 2k inside the host");
  std::vector<Vertex> pts;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) pts.push_back(host.at(iv.start + 2 * i));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (g.has_edge(pts[i], pts[j])) return Jump{Interval{host.wrap(iv.start + 2 * i), 2 * (j - i)}};
  throw HypothesisViolation("find_jump",
                            "the " + std::to_string(k + 1) +
                                " scanned points of an interval are independent (alpha > k)",
                            pts);
}

// Every path produced by repeatedly replacing the first jump (as found by
// find_jump on the leading 2k-interval) by its endpoint edge, starting from
// `p`, until fewer than 2k edges remain. Each step removes between 1 and
// 2k-1 edges and only deletes vertices, so step s is recorded by the step at
// which each original vertex disappears.
class ShorteningChain {
 public:
  ShorteningChain(const Graph& g, Path p, int k) : original_(std::move(p)), k_(k) {
    if (k < 1) throw PreconditionError("shortening needs k >= 1");
    const std::size_t npos = std::numeric_limits<std::size_t>::max();
    removed_at_.assign(original_.verts.size(), npos);
    lengths_.push_back(original_.length());
    const auto window = static_cast<std::size_t>(2 * k + 1);

    std::vector<std::size_t> front;  // positions of the current path's leading vertices
    std::size_t next = 0;
    std::size_t step = 0;
    std::vector<Vertex> pts;
    while (true) {
      while (front.size() < window && next < original_.verts.size()) front.push_back(next++);
      std::size_t len = lengths_.back();
      if (len < static_cast<std::size_t>(2 * k)) break;
      pts.clear();
      for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) pts.push_back(original_.verts[front[2 * i]]);
      std::size_t a = 0, b = 0;
      bool hit = false;
      for (std::size_t i = 0; i < pts.size() && !hit; ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          if (g.has_edge(pts[i], pts[j])) {
            a = 2 * i;
            b = 2 * j;
            hit = true;
            break;
          }
      if (!hit)
        throw HypothesisViolation("shorten_path",
                                  "the " + std::to_string(k + 1) +
                                      " scanned points of a leading interval are independent (alpha > k)",
                                  pts);
      ++step;
      for (std::size_t i = a + 1; i < b; ++i) removed_at_[front[i]] = step;
      front.erase(front.begin() + static_cast<std::ptrdiff_t>(a + 1), front.begin() + static_cast<std::ptrdiff_t>(b));
      lengths_.push_back(len - (b - a) + 1);
    }
  }

  const Path& original() const noexcept { return original_; }
  const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }

  // Same endpoints, length in [q, q + 2k - 2]: the first chain member whose
  // length is at most q + 2k - 2.
  Path shortened(std::size_t q) const {
    if (q < 1 || q > original_.length())
      throw PreconditionError("shorten_path needs 1 <= q <= length (q=" + std::to_string(q) +
                              ", length=" + std::to_string(original_.length()) + ")");
    const std::size_t cap = q + static_cast<std::size_t>(2 * k_ - 2);
    std::size_t s = 0;
    while (lengths_[s] > cap) ++s;
    Path out;
    out.verts.reserve(lengths_[s] + 1);
    for (std::size_t i = 0; i < original_.verts.size(); ++i)
      if (removed_at_[i] > s) out.verts.push_back(original_.verts[i]);
    return out;
  }

 private:
  Path original_;
  int k_;
  std::vector<std::size_t> removed_at_;
  std::vector<std::size_t> lengths_;
};

// Path with p's endpoints, vertices drawn from p, and length in [q, q+2k-2].
inline Path shorten_path(const Graph& g, const Path& p, std::size_t q, int k) {
  return ShorteningChain(g, p, k).shortened(q);
}

// Greedy path from x: always step to the lowest-id unused neighbor (restricted
// to `allowed` when given) until the end vertex has no unused neighbor. Its
// length is then at least the minimum degree, and at least 2*mindeg - 1 when
// the graph is bipartite.
inline Path maximal_path_from(const Graph& g, Vertex x, const std::vector<char>* allowed = nullptr) {
  std::vector<char> used(g.order(), 0);
  Path p;
  p.verts.push_back(x);
  used[static_cast<std::size_t>(x)] = 1;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(p.back())) {
      auto wi = static_cast<std::size_t>(w);
      if (used[wi] || (allowed && !(*allowed)[wi])) continue;
      next = w;
      break;
    }
    if (next == -1) return p;
    used[static_cast<std::size_t>(next)] = 1;
    p.verts.push_back(next);
  }
}

// Position of every cycle vertex, -1 for vertices off the cycle.
inline std::vector<std::int64_t> cycle_positions(std::size_t n, const Cycle& c) {
  std::vector<std::int64_t> pos(n, -1);
  for (std::size_t i = 0; i < c.verts.size(); ++i) pos[static_cast<std::size_t>(c.verts[i])] = static_cast<std::int64_t>(i);
  return pos;
}

// The longer of the two arcs of `c` between a and b, as a path from a to b.
// On a tie the arc that follows the cycle's orientation from a is used.
inline Path longer_arc(const Cycle& c, Vertex a, Vertex b) {
  const std::size_t n = c.verts.size();
  auto ia = std::find(c.verts.begin(), c.verts.end(), a);
  auto ib = std::find(c.verts.begin(), c.verts.end(), b);
  if (ia == c.verts.end() || ib == c.verts.end() || a == b)
    throw InputError("longer_arc needs two distinct cycle vertices");
  const auto pa = static_cast<std::size_t>(ia - c.verts.begin());
  const auto pb = static_cast<std::size_t>(ib - c.verts.begin());
  const std::size_t forward = (pb + n - pa) % n;
  Path p;
  if (2 * forward >= n) {
    for (std::size_t i = 0; i <= forward; ++i) p.verts.push_back(c.verts[(pa + i) % n]);
  } else {
    for (std::size_t i = 0; i <= n - forward; ++i) p.verts.push_back(c.verts[(pa + n - i) % n]);
  }
  return p;
}

}  // namespace pancyclic
