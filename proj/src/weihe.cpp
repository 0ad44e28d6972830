#include "hsk/weihe.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace hsk {

namespace {

struct Incidence {
  std::vector<std::vector<std::uint32_t>> lists;  // vertex -> alive edge indices

  Incidence(std::uint32_t n, const std::vector<Edge>& edges, const std::vector<bool>& alive)
      : lists(static_cast<std::size_t>(n) + 1) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (alive[i])
        for (VertexId v : edges[i]) lists[v].push_back(static_cast<std::uint32_t>(i));
  }
};

// Kills every edge that equals or strictly contains another alive edge
// (duplicates keep their first occurrence). Returns the number of deletions.
// The survivor set is unique, so one sweep small-to-large suffices.
std::uint64_t exhaust_subsumption(const std::vector<Edge>& edges, std::vector<bool>& alive,
                                  std::uint32_t n) {
  std::vector<std::uint32_t> order;
  order.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) order.push_back(static_cast<std::uint32_t>(i));
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return edges[a].size() < edges[b].size();
  });

  const Incidence inc(n, edges, alive);
  std::uint64_t deleted = 0;
  for (std::uint32_t i : order) {
    if (!alive[i]) continue;
    const Edge& e = edges[i];
    // Supersets of e all contain e's least frequent vertex.
    VertexId probe = e[0];
    for (VertexId v : e)
      if (inc.lists[v].size() < inc.lists[probe].size()) probe = v;
    for (std::uint32_t j : inc.lists[probe]) {
      if (j == i || !alive[j]) continue;
      const Edge& f = edges[j];
      if (f.size() < e.size() || (f.size() == e.size() && j < i)) continue;
      if (std::includes(f.begin(), f.end(), e.begin(), e.end())) {
        alive[j] = false;
        ++deleted;
      }
    }
  }
  return deleted;
}

struct DominatedWitness {
  VertexId dominator;
  VertexId vertex;
};

// Smallest (dominator, vertex) pair over all dominated vertices, or nothing.
std::optional<DominatedWitness> scan_dominated(const std::vector<Edge>& edges,
                                               const std::vector<bool>& alive, std::uint32_t n) {
  const Incidence inc(n, edges, alive);
  std::optional<DominatedWitness> best;
  std::vector<VertexId> candidates;
  for (VertexId v = 1; v <= n; ++v) {
    const auto& list = inc.lists[v];
    if (list.empty()) continue;
    std::uint32_t smallest = list[0];
    for (std::uint32_t i : list)
      if (edges[i].size() < edges[smallest].size()) smallest = i;
    candidates.clear();
    for (VertexId u : edges[smallest])
      if (u != v) candidates.push_back(u);
    for (std::uint32_t i : list) {
      if (candidates.empty()) break;
      if (i == smallest) continue;
      const Edge& e = edges[i];
      std::erase_if(candidates,
                    [&](VertexId u) { return !std::binary_search(e.begin(), e.end(), u); });
    }
    if (candidates.empty()) continue;
    const VertexId u = *std::min_element(candidates.begin(), candidates.end());
    if (!best || u < best->dominator || (u == best->dominator && v < best->vertex))
      best = DominatedWitness{u, v};
  }
  return best;
}

}  // namespace

std::optional<std::size_t> find_subsumed_edge(const Hypergraph& h) {
  for (std::size_t j = 0; j < h.edges.size(); ++j) {
    const Edge& f = h.edges[j];
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      if (i == j) continue;
      const Edge& e = h.edges[i];
      if (e.size() > f.size() || (e.size() == f.size() && i > j)) continue;
      if (std::includes(f.begin(), f.end(), e.begin(), e.end())) return j;
    }
  }
  return std::nullopt;
}

std::optional<VertexId> find_dominated_vertex(const Hypergraph& h) {
  const std::vector<bool> alive(h.edges.size(), true);
  const auto witness = scan_dominated(h.edges, alive, h.n);
  if (!witness) return std::nullopt;
  return witness->vertex;
}

WeiheResult reduce_weihe(const Hypergraph& h) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Edge> edges = h.edges;
  std::vector<bool> alive(edges.size(), true);
  std::uint64_t deleted_vertices = 0;

  for (;;) {
    exhaust_subsumption(edges, alive, h.n);
    const auto witness = scan_dominated(edges, alive, h.n);
    if (!witness) break;
    const VertexId v = witness->vertex;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i]) continue;
      const auto it = std::lower_bound(edges[i].begin(), edges[i].end(), v);
      if (it != edges[i].end() && *it == v) edges[i].erase(it);
    }
    ++deleted_vertices;
  }

  WeiheResult r;
  r.graph.n = h.n;
  r.graph.d = h.d;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) r.graph.edges.push_back(std::move(edges[i]));

  r.stats.stage = "weihe";
  r.stats.edges_in = h.m();
  r.stats.edges_out = r.graph.m();
  r.stats.vertices_out = r.graph.vertex_support();
  r.stats.deleted_vertices = deleted_vertices;
  r.stats.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  return r;
}

}  // namespace hsk
