#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hsk {

/// One row of reduction accounting, shared by kernel stages, Weihe's rules
/// and the shuffle stage. Times are integer nanoseconds (steady clock).
/// vertices_out counts distinct vertices in the output edges;
/// peak_store_cells counts store cells plus subset-catalog entries the stage
/// materialized; deleted_vertices is nonzero only for the vertex-deleting
/// reduction.
struct ReductionStats {
  std::string stage;
  std::string parameters;
  std::uint64_t edges_in = 0;
  std::uint64_t edges_out = 0;
  std::uint64_t vertices_out = 0;
  std::optional<std::uint64_t> k_used;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t peak_store_cells = 0;
  std::uint64_t deleted_vertices = 0;

  bool operator==(const ReductionStats&) const = default;
};

}  // namespace hsk
