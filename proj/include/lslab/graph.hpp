#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lslab/bits.hpp"
#include "lslab/errors.hpp"

namespace lslab {

// Plain edge-list graph. Parallel edges are allowed (each edge keeps its own
// identity/index); self-loops are rejected where instances are built.
struct Graph {
  std::uint32_t n = 0;
  bool directed = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }

  void check() const {
    for (auto& [u, v] : edges)
      if (u >= n || v >= n) throw ArityError("edge endpoint out of range");
  }

  // Undirected adjacency as bit masks over vertices, deduplicated, no self bit.
  std::vector<Bits> adjacency_masks() const {
    std::vector<Bits> adj(n, Bits(n));
    for (auto& [u, v] : edges) {
      if (u == v) continue;
      adj[u].set(v, true);
      adj[v].set(u, true);
    }
    return adj;
  }

  // Distinct-neighbor lists, ascending.
  std::vector<std::vector<std::uint32_t>> neighbor_lists() const {
    auto adj = adjacency_masks();
    std::vector<std::vector<std::uint32_t>> out(n);
    for (std::uint32_t v = 0; v < n; ++v) out[v] = adj[v].indices();
    return out;
  }

  // Incidence degree: number of edge slots touching v (parallel edges count).
  std::vector<std::uint32_t> incidence_degrees() const {
    std::vector<std::uint32_t> d(n, 0);
    for (auto& [u, v] : edges) {
      if (u == v) continue;
      ++d[u];
      ++d[v];
    }
    return d;
  }

  bool has_parallel_edges() const {
    auto es = edges;
    for (auto& e : es)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) != es.end();
  }
};

}  // namespace lslab
