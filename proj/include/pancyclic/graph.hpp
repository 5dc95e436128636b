#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/errors.hpp"

namespace pancyclic {

using Edge = std::pair<Vertex, Vertex>;

// Fixed-size bitset over vertex ids.
class VertexBitset {
 public:
  VertexBitset() = default;
  explicit VertexBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Lowest set index at or after `from`, or universe() when none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return i < n_ ? i : n_;
      }
      if (++wi >= words_.size()) return n_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  VertexBitset& operator&=(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBitset& operator|=(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  VertexBitset& subtract(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  std::size_t intersection_count(const VertexBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool intersects(const VertexBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const VertexBitset&, const VertexBitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbor
// lists are sorted ascending. Graphs up to kDenseLimit vertices also carry an
// adjacency bit matrix for constant-time edge queries.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 20000;

  Graph() = default;

  // Empty graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) { build_matrix(); }

  // Throws InputError on loops, duplicate edges and ids out of range.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an id out of range for n=" + std::to_string(n));
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& a = adj[v];
      std::sort(a.begin(), a.end());
      if (auto it = std::adjacent_find(a.begin(), a.end()); it != a.end())
        throw InputError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*it) + ")");
    }
    return Graph(std::move(adj));
  }

  // Adjacency lists must already be symmetric, loop-free and duplicate-free;
  // they are sorted here.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return Graph(std::move(adj));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[index(v)]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[index(v)].size(); }

  bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    if (!contains(u) || !contains(v) || u == v) return false;
    if (!matrix_.empty()) return matrix_[index(u)].test(index(v));
    const auto& a = adj_[index(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Neighborhood as a bitset; only available when order() <= kDenseLimit.
  const VertexBitset& neighbor_bits(Vertex v) const noexcept { return matrix_[index(v)]; }
  bool has_matrix() const noexcept { return !matrix_.empty() || order() == 0; }

  std::size_t min_degree() const noexcept {
    std::size_t d = order() == 0 ? 0 : adj_.front().size();
    for (const auto& a : adj_) d = std::min(d, a.size());
    return d;
  }
  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  // All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
  }

  bool is_complete() const noexcept {
    return std::all_of(adj_.begin(), adj_.end(),
                       [&](const auto& a) { return a.size() + 1 == order(); });
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    edge_count_ = twice / 2;
    build_matrix();
  }

  static std::size_t index(Vertex v) noexcept { return static_cast<std::size_t>(v); }

  void build_matrix() {
    if (order() > kDenseLimit) return;
    matrix_.assign(order(), VertexBitset(order()));
    for (std::size_t u = 0; u < order(); ++u)
      for (Vertex v : adj_[u]) matrix_[u].set(index(v));
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexBitset> matrix_;
  std::size_t edge_count_ = 0;
};

// Induced subgraph together with its id translation in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;    // new id -> old id
  std::vector<Vertex> from_original;  // old id -> new id, -1 when absent

  Vertex original(Vertex v) const { return to_original[static_cast<std::size_t>(v)]; }
  Vertex local(Vertex v) const { return from_original[static_cast<std::size_t>(v)]; }

  template <class Container>
  Container lift(const Container& local_verts) const {
    Container out = local_verts;
    for (auto& v : out) v = original(v);
    return out;
  }
};

// New ids follow ascending order of the original ids in `s`.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  Subgraph sub;
  sub.from_original.assign(g.order(), -1);
  sub.to_original.assign(s.begin(), s.end());
  std::sort(sub.to_original.begin(), sub.to_original.end());
  for (std::size_t i = 0; i < sub.to_original.size(); ++i) {
    Vertex v = sub.to_original[i];
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (sub.from_original[static_cast<std::size_t>(v)] != -1)
      throw InputError("vertex " + std::to_string(v) + " listed twice");
    sub.from_original[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adj(sub.to_original.size());
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    for (Vertex w : g.neighbors(sub.to_original[i]))
      if (Vertex j = sub.from_original[static_cast<std::size_t>(w)]; j != -1) adj[i].push_back(j);
  sub.graph = Graph::from_adjacency(std::move(adj));
  return sub;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(static_cast<Vertex>(u));
    std::size_t j = 0;
    for (std::size_t v = 0; v < n; ++v) {
      while (j < nb.size() && static_cast<std::size_t>(nb[j]) < v) ++j;
      bool adjacent = j < nb.size() && static_cast<std::size_t>(nb[j]) == v;
      if (v != u && !adjacent) adj[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

// Membership mask of a vertex list over 0..n-1.
inline std::vector<char> membership(std::size_t n, std::span<const Vertex> s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.order());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

inline std::size_t count_neighbors_in(const Graph& g, Vertex v, const std::vector<char>& in) {
  std::size_t c = 0;
  for (Vertex w : g.neighbors(v)) c += in[static_cast<std::size_t>(w)] ? 1 : 0;
  return c;
}

}  // namespace pancyclic
