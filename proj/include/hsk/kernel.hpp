#pragma once

#include <cstdint>
#include <string>

#include "hsk/hypergraph.hpp"
#include "hsk/stats.hpp"
#include "hsk/store.hpp"

namespace hsk {

/// Which subsets of an edge are inspected and counted.
///  - full: all 2^|e| subsets (requires |e| <= 30);
///  - restricted: intersections with already kept edges, subsets of size at
///    most max_small_size, and the edge itself (requires |e| <= 64). Cheaper
///    on instances with large d; the counting size bound is not guaranteed.
struct SubsetStrategy {
  enum class Kind { full, restricted };
  Kind kind = Kind::full;
  std::uint32_t max_small_size = 1;

  static SubsetStrategy full() { return {}; }
  static SubsetStrategy restricted(std::uint32_t max_small_size) {
    return {Kind::restricted, max_small_size};
  }
  bool operator==(const SubsetStrategy&) const = default;
};

struct FkConfig {
  std::uint32_t k = 0;
  StoreBackend store = StoreBackend::array;
  SubsetStrategy strategy{};
  /// Also drop any edge equal to or strictly containing an earlier kept edge.
  bool superset_removal = true;
};

struct KernelResult {
  Hypergraph graph;
  ReductionStats stats;
  /// Largest counter value at termination (superset count or petal count).
  std::uint32_t max_counter = 0;
};

/// (k+1)^(d - s_size), saturating at cap. With cap = m+1 a saturated
/// threshold can never fire, since counters never exceed m.
std::uint64_t fk_threshold(std::uint64_t k, std::uint32_t d, std::uint32_t s_size,
                           std::uint64_t cap);

/// Counting kernelization: an edge is kept iff every inspected subset s has
/// strictly fewer than (k+1)^(d-|s|) kept supersets so far; keeping an edge
/// bumps the counters of all its inspected subsets. Output edges are a
/// subsequence of the input; with the full strategy at most (k+1)^d edges
/// survive.
KernelResult kernelize_fk(const Hypergraph& h, const FkConfig& cfg);

/// Sunflower kernelization: an edge is dropped iff some inspected subset s
/// already has k+1 petals (pairwise disjoint remainders of kept edges
/// containing s). Keeping an edge extends every subset's sunflower whose
/// current petals avoid the edge's remainder. Output edges are a subsequence
/// of the input; petals never exceed k+1.
KernelResult kernelize_bev(const Hypergraph& h, const FkConfig& cfg);

/// Renders "k=..,store=..,strategy=..[,nosuperset]" for stats rows.
std::string describe_config(const FkConfig& cfg);

}  // namespace hsk
