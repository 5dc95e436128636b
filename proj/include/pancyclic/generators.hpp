#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "pancyclic/certificate.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/random.hpp"

namespace pancyclic {

/// Extremal construction for k >= 3: k cliques of size 2k-2 laid out in
/// id-contiguous blocks (block i holds ids i(2k-2) .. (i+1)(2k-2)-1), plus a
/// cyclic matching with one edge between block i and block i+1 mod k. Each
/// matching edge joins the lowest-id unmatched vertex of both blocks, edges
/// placed in order i = 0..k-1.
///
/// The result is Hamiltonian with independence number k and minimum degree
/// 2k-3, yet has no cycle of length 2k-1.
inline Graph generate_extremal(int k) {
  if (k < 3) throw InputError("extremal family needs k >= 3, got " + std::to_string(k));
  const std::size_t block = static_cast<std::size_t>(2 * k - 2);
  const std::size_t n = static_cast<std::size_t>(k) * block;
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < static_cast<std::size_t>(k); ++b)
    for (std::size_t i = 0; i < block; ++i)
      for (std::size_t j = i + 1; j < block; ++j)
        edges.emplace_back(static_cast<Vertex>(b * block + i), static_cast<Vertex>(b * block + j));
  std::vector<std::size_t> next_free(static_cast<std::size_t>(k), 0);
  for (std::size_t b = 0; b < static_cast<std::size_t>(k); ++b) {
    std::size_t c = (b + 1) % static_cast<std::size_t>(k);
    Vertex u = static_cast<Vertex>(b * block + next_free[b]++);
    Vertex v = static_cast<Vertex>(c * block + next_free[c]++);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, edges);
}

inline std::size_t cyclic_distance(std::size_t u, std::size_t v, std::size_t n) {
  std::size_t d = u > v ? u - v : v - u;
  return std::min(d, n - d);
}

/// Complement of the p-th power of the n-cycle: u ~ v iff their cyclic
/// distance exceeds p. Minimum degree n-2p-1, independence number p+1.
inline Graph generate_power_complement(std::size_t n, std::size_t p) {
  if (n < 2 * p + 2)
    throw InputError("power complement needs n >= 2p+2 (n=" + std::to_string(n) +
                     ", p=" + std::to_string(p) + ")");
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].reserve(n - 2 * p - 1);
    for (std::size_t v = 0; v < n; ++v)
      if (v != u && cyclic_distance(u, v, n) > p) adj[u].push_back(static_cast<Vertex>(v));
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Hamilton cycle 0, p+1, 2(p+1), ... (mod n) of generate_power_complement(n, p).
inline Cycle known_hamilton_cycle_power_complement(std::size_t n, std::size_t p) {
  if (n < 2 * p + 3)
    throw InputError("stride cycle needs n >= 2p+3 (n=" + std::to_string(n) + ", p=" +
                     std::to_string(p) + ")");
  if (std::gcd(p + 1, n) != 1)
    throw InputError("stride cycle needs gcd(p+1, n) = 1 (n=" + std::to_string(n) +
                     ", p=" + std::to_string(p) + ")");
  Cycle c;
  c.verts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.verts.push_back(static_cast<Vertex>((i * (p + 1)) % n));
  return c;
}

// Small fixtures.

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t v = (u + 1) % n;
    e.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  return Graph::from_edges(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(u + 1));
  return Graph::from_edges(n, e);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(a + v));
  return Graph::from_edges(a + b, e);
}

inline Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    e.emplace_back(i, i + 5);
    Vertex a = 5 + i, b = 5 + (i + 2) % 5;
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph::from_edges(10, e);
}

// Each pair joined independently with probability num/den; pairs are drawn
// from `rng` in lexicographic order.
inline Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, RandomSource& rng) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.below(den) < num) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(n, e);
}

}  // namespace pancyclic
