#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hsk/hypergraph.hpp"

namespace hsk {

struct GreedyBound {
  std::uint32_t k = 0;
  std::vector<VertexId> vertices;
};

/// Repeatedly takes a vertex hitting the most unhit edges (ties to the
/// smallest id) until every edge is hit. Deterministic; k bounds the minimum
/// hitting set size from above.
GreedyBound greedy_upper_bound(const Hypergraph& h);

/// Exact minimum hitting set size if it is at most `budget`, nothing
/// otherwise. Branches on the vertices of the first unhit edge, pruned by the
/// best solution found and a disjoint-edge lower bound.
std::optional<std::uint32_t> exact_min_hitting_set(const Hypergraph& h, std::uint32_t budget);

bool verify_hitting_set(const Hypergraph& h, std::span<const VertexId> set);

}  // namespace hsk
