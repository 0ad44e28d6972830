#include "hsk/bounds.hpp"

#include <algorithm>

namespace hsk {

GreedyBound greedy_upper_bound(const Hypergraph& h) {
  GreedyBound bound;
  std::vector<bool> hit(h.edges.size(), false);
  std::size_t remaining = h.edges.size();
  std::vector<std::uint64_t> degree(static_cast<std::size_t>(h.n) + 1);
  while (remaining > 0) {
    std::fill(degree.begin(), degree.end(), 0);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
      if (!hit[i])
        for (VertexId v : h.edges[i]) ++degree[v];
    VertexId best = 0;
    for (VertexId v = 1; v <= h.n; ++v)
      if (degree[v] > (best == 0 ? 0 : degree[best])) best = v;
    if (best == 0) break;  // only empty edges remain, nothing can hit them
    for (std::size_t i = 0; i < h.edges.size(); ++i)
      if (!hit[i] && std::binary_search(h.edges[i].begin(), h.edges[i].end(), best)) {
        hit[i] = true;
        --remaining;
      }
    bound.vertices.push_back(best);
  }
  bound.k = static_cast<std::uint32_t>(bound.vertices.size());
  return bound;
}

namespace {

struct ExactSolver {
  const Hypergraph& h;
  std::vector<bool> chosen;
  std::uint32_t best;  // budget + 1 when nothing found yet

  explicit ExactSolver(const Hypergraph& graph, std::uint32_t budget)
      : h(graph), chosen(static_cast<std::size_t>(graph.n) + 1, false), best(budget + 1) {}

  bool edge_hit(const Edge& e) const {
    for (VertexId v : e)
      if (chosen[v]) return true;
    return false;
  }

  // Greedy set of pairwise disjoint unhit edges; each needs its own vertex.
  std::uint32_t disjoint_lower_bound(std::vector<bool>& blocked) const {
    std::fill(blocked.begin(), blocked.end(), false);
    std::uint32_t count = 0;
    for (const Edge& e : h.edges) {
      if (edge_hit(e)) continue;
      bool free = true;
      for (VertexId v : e)
        if (blocked[v]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (VertexId v : e) blocked[v] = true;
      ++count;
    }
    return count;
  }

  void solve(std::uint32_t used, std::vector<bool>& blocked) {
    const Edge* open = nullptr;
    for (const Edge& e : h.edges)
      if (!edge_hit(e)) {
        open = &e;
        break;
      }
    if (open == nullptr) {
      best = std::min(best, used);
      return;
    }
    if (used + disjoint_lower_bound(blocked) >= best) return;
    for (VertexId v : *open) {
      chosen[v] = true;
      solve(used + 1, blocked);
      chosen[v] = false;
    }
  }
};

}  // namespace

std::optional<std::uint32_t> exact_min_hitting_set(const Hypergraph& h, std::uint32_t budget) {
  for (const Edge& e : h.edges)
    if (e.empty()) return std::nullopt;  // unhittable
  ExactSolver solver(h, budget);
  std::vector<bool> blocked(static_cast<std::size_t>(h.n) + 1, false);
  solver.solve(0, blocked);
  if (solver.best > budget) return std::nullopt;
  return solver.best;
}

bool verify_hitting_set(const Hypergraph& h, std::span<const VertexId> set) {
  std::vector<bool> chosen(static_cast<std::size_t>(h.n) + 1, false);
  for (VertexId v : set)
    if (v >= 1 && v <= h.n) chosen[v] = true;
  for (const Edge& e : h.edges) {
    bool hit = false;
    for (VertexId v : e)
      if (chosen[v]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace hsk
