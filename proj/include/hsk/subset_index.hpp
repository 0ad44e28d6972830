#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsk/hypergraph.hpp"

namespace hsk {

/// Edge ids are positional: the i-th edge of the input list gets id i+1.
struct EdgeCatalog {
  std::uint32_t edge_count = 0;

  std::uint32_t eid_of(std::size_t index) const { return static_cast<std::uint32_t>(index) + 1; }
  std::size_t index_of(std::uint32_t eid) const { return eid - 1; }
};

EdgeCatalog assign_edge_ids(const Hypergraph& h);

/// Flat list of fixed-width subset codes with their originating edge id and
/// the subset's bitmask within that edge (bit j selects the j-th smallest
/// vertex). Codes are row-major in `codes`; row r spans
/// codes[r*width .. (r+1)*width).
struct CodeList {
  std::uint32_t width = 0;
  std::uint32_t alphabet = 0;  // all code values are < alphabet
  std::vector<std::uint32_t> codes;
  std::vector<std::uint32_t> eids;
  std::vector<std::uint64_t> masks;

  std::size_t rows() const { return eids.size(); }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {codes.data() + r * width, width};
  }
};

/// Enumerates every subset of every edge (bitmask order 0..2^|e|-1 per edge,
/// edges in id order) as canonical codes padded with n+1. The list has
/// sum(2^|e|) <= 2^d * m rows. Requires every edge size <= 30.
CodeList enumerate_subset_list(const Hypergraph& h, const EdgeCatalog& cat);

/// Stable lexicographic sort of the rows via `width` counting-sort passes
/// over the code alphabet, least significant column first. The counting and
/// permutation buffers are reused across passes, giving
/// O(width * (alphabet + rows)) time.
void radix_sort_codes(CodeList& list);

/// Subset ids: distinct subsets of edges get ids 1..subset_count in
/// lexicographic code order. For each edge, sid_of(eid, mask) resolves the
/// subset selected by `mask` in O(1).
struct SubsetCatalog {
  std::uint32_t subset_count = 0;
  std::vector<std::uint64_t> offsets;  // per edge, into sids; size m+1
  std::vector<std::uint32_t> sids;     // sids[offsets[eid-1] + mask]

  std::uint64_t flat_pos(std::uint32_t eid, std::uint64_t mask) const {
    return offsets[eid - 1] + mask;
  }
  std::uint32_t sid_of(std::uint32_t eid, std::uint64_t mask) const {
    return sids[flat_pos(eid, mask)];
  }
  /// Number of (subset, sid) entries held, sum(2^|e|).
  std::uint64_t entry_count() const { return sids.size(); }
};

SubsetCatalog build_subset_catalog(const Hypergraph& h, const EdgeCatalog& cat);

/// Per-subset local vertex indexing. For a subset s of edge e, the vertices
/// of edges containing s form V^s; each v in V^s has a local index
/// vid(v) in 1..|V^s|, assigned in ascending vertex order. The catalog
/// stores, for every (edge, subset) pair, the local indices of the vertices
/// in e minus s (ascending vertex order), plus |V^s| per sid. Within each
/// edge, subsets are numbered by their enumeration order, sid_in_edge(mask)
/// = mask + 1.
struct LocalCatalog {
  std::vector<std::uint64_t> local_offsets;  // parallel to SubsetCatalog::sids, +1 sentinel
  std::vector<std::uint32_t> locals;         // flat vid runs
  std::vector<std::uint32_t> vs_size;        // per sid, 1-based
  std::vector<std::uint64_t> vs_offset;      // prefix sums of vs_size, for flag addressing

  static std::uint64_t sid_in_edge(std::uint64_t mask) { return mask + 1; }

  std::span<const std::uint32_t> locals_of(std::uint64_t flat_pos) const {
    return {locals.data() + local_offsets[flat_pos],
            static_cast<std::size_t>(local_offsets[flat_pos + 1] - local_offsets[flat_pos])};
  }
  /// Number of local indices held, at most 2^d * d * m.
  std::uint64_t entry_count() const { return locals.size(); }
  std::uint64_t flag_cells() const { return vs_offset.empty() ? 0 : vs_offset.back(); }
};

LocalCatalog build_local_catalog(const Hypergraph& h, const EdgeCatalog& cat,
                                 const SubsetCatalog& sc);

}  // namespace hsk
