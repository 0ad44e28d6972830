#pragma once

// Store-generic kernelization passes. Included by the dispatching .cpp and by
// tests that want to run a pass against a store they can inspect afterwards.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hsk/kernel.hpp"

namespace hsk::detail {

/// Emits the subset masks of `e` inspected under `strategy`, deduplicated and
/// ascending. For the restricted strategy, `kept` is the list of edges kept
/// so far.
void subset_family(const Edge& e, const SubsetStrategy& strategy,
                   const std::vector<Edge>& kept, std::vector<std::uint64_t>& out);

inline std::uint64_t full_mask(const Edge& e) {
  return e.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e.size()) - 1;
}

template <class Store>
Hypergraph run_fk(const Hypergraph& h, const FkConfig& cfg, Store& store) {
  const std::uint64_t cap = h.edges.size() + 1;
  std::vector<std::uint64_t> thresholds(h.d + 1);
  for (std::uint32_t t = 0; t <= h.d; ++t) thresholds[t] = fk_threshold(cfg.k, h.d, t, cap);

  Hypergraph out{h.n, h.d, {}};
  std::vector<std::uint64_t> family;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::uint32_t eid = static_cast<std::uint32_t>(i) + 1;
    subset_family(e, cfg.strategy, out.edges, family);
    bool keep = true;
    for (std::uint64_t mask : family) {
      const auto ref = store.subset_ref(e, eid, mask);
      if (store.counter(ref) >= thresholds[std::popcount(mask)]) {
        keep = false;
        break;
      }
      if (cfg.superset_removal && store.kept(ref)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    for (std::uint64_t mask : family) store.increment(store.subset_ref(e, eid, mask));
    if (cfg.superset_removal) store.mark_kept(store.subset_ref(e, eid, full_mask(e)));
    out.edges.push_back(e);
  }
  return out;
}

template <class Store>
Hypergraph run_bev(const Hypergraph& h, const FkConfig& cfg, Store& store) {
  Hypergraph out{h.n, h.d, {}};
  std::vector<std::uint64_t> family;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::uint32_t eid = static_cast<std::uint32_t>(i) + 1;
    subset_family(e, cfg.strategy, out.edges, family);
    bool keep = true;
    for (std::uint64_t mask : family) {
      const auto ref = store.subset_ref(e, eid, mask);
      if (store.counter(ref) > cfg.k) {
        keep = false;
        break;
      }
      if (cfg.superset_removal && store.kept(ref)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    for (std::uint64_t mask : family) {
      const auto ref = store.subset_ref(e, eid, mask);
      // The remainder e minus s becomes a new petal iff none of its vertices
      // is already part of a petal of s.
      bool fresh = true;
      std::uint32_t rank = 0;
      for (std::size_t j = 0; j < e.size() && fresh; ++j) {
        if (mask >> j & 1) continue;
        fresh = !store.used(ref, rank, e[j]);
        ++rank;
      }
      if (!fresh) continue;
      store.increment(ref);
      rank = 0;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (mask >> j & 1) continue;
        store.mark_used(ref, rank, e[j]);
        ++rank;
      }
    }
    if (cfg.superset_removal) store.mark_kept(store.subset_ref(e, eid, full_mask(e)));
    out.edges.push_back(e);
  }
  return out;
}

}  // namespace hsk::detail
