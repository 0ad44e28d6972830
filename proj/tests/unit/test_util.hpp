#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hsk/hypergraph.hpp"

namespace hsk::testutil {

inline Hypergraph hg(std::uint32_t n, std::uint32_t d,
                     std::initializer_list<std::initializer_list<VertexId>> edges) {
  Hypergraph h{n, d, {}};
  for (const auto& e : edges) h.edges.emplace_back(e);
  return h;
}

inline std::vector<Edge> sorted_edges(const Hypergraph& h) {
  std::vector<Edge> es = h.edges;
  std::sort(es.begin(), es.end());
  return es;
}

// Reference minimum hitting set size by subset enumeration; usable for n <= 20.
inline std::uint32_t brute_force_min_hs(const Hypergraph& h) {
  if (h.edges.empty()) return 0;
  std::uint32_t best = h.n;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << h.n); ++pick) {
    const auto size = static_cast<std::uint32_t>(std::popcount(pick));
    if (size >= best) continue;
    bool hits_all = true;
    for (const Edge& e : h.edges) {
      bool hit = false;
      for (VertexId v : e) hit |= (pick >> (v - 1) & 1) != 0;
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) best = size;
  }
  return best;
}

}  // namespace hsk::testutil
