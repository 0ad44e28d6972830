#pragma once

#include <cstddef>
#include <optional>

#include "hsk/hypergraph.hpp"
#include "hsk/stats.hpp"

namespace hsk {

struct WeiheResult {
  Hypergraph graph;
  ReductionStats stats;
};

/// Earliest-index edge that may be deleted because it equals or strictly
/// contains another edge (equal edges keep their first occurrence).
std::optional<std::size_t> find_subsumed_edge(const Hypergraph& h);

/// A vertex v is dominated if some u != v lies in every edge containing v
/// (vertices in no edge do not count). Among all dominated vertices the one
/// whose smallest dominating partner is minimal is returned, ties broken by
/// vertex id, so the smallest surviving dominator wins.
std::optional<VertexId> find_dominated_vertex(const Hypergraph& h);

/// Applies the two rules to exhaustion: subsumed edges are deleted until none
/// remains, then one dominated vertex is deleted (removed from the universe
/// and from every edge) and subsumption restarts, until neither rule fires.
/// Vertex ids are never renumbered. Preserves the minimum hitting set size
/// exactly; can only shrink edges and the edge list.
WeiheResult reduce_weihe(const Hypergraph& h);

}  // namespace hsk
