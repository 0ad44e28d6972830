#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hsk/hypergraph.hpp"

namespace hsk {

/// Simple undirected graph on {1..n}, no self-loops, adjacency sorted.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::vector<VertexId>> adj;  // 1-based; adj[0] unused

  std::uint64_t edge_count() const;
  bool has_edge(VertexId u, VertexId v) const;
};

/// Parses "p graph <n> <m>" followed by m lines "u v" ('c' comment lines
/// allowed). Self-loops are rejected; repeated pairs are collapsed.
Graph parse_graph(std::string_view text);

/// m edges drawn independently and uniformly from the d-subsets of {1..n}
/// (Floyd's sampling), vertices ascending per edge. Duplicate edges may
/// occur. Deterministic per seed; requires 1 <= d <= n.
Hypergraph gen_random(std::uint32_t n, std::uint64_t m, std::uint32_t d, std::uint64_t seed);

/// Encodes cluster vertex deletion as 3-hitting-set: one triple {a,b,c} per
/// induced path a-b-c (b the center, a < c, {a,c} not an edge), emitted in
/// ascending (b, a, c) scan order. Every triple is distinct since the center
/// determines the path.
Hypergraph cvd_to_hs3(const Graph& g);

}  // namespace hsk
