#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hsk/bounds.hpp"
#include "hsk/generators.hpp"
#include "hsk/weihe.hpp"
#include "test_util.hpp"

using namespace hsk;
using testutil::hg;

TEST_SUITE_BEGIN("weihe");

TEST_CASE("subsumption then dominance collapses a nested pair to one singleton") {
  const WeiheResult r = reduce_weihe(hg(3, 3, {{1, 2}, {1, 2, 3}}));
  CHECK(r.graph.edges == std::vector<Edge>{{1}});
  CHECK(r.stats.edges_in == 2);
  CHECK(r.stats.edges_out == 1);
  CHECK(r.stats.deleted_vertices >= 1);
  CHECK(r.stats.stage == "weihe");
}

TEST_CASE("triangle is already reduced") {
  const Hypergraph h = hg(3, 2, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(reduce_weihe(h).graph == h);
}

TEST_CASE("single singleton edge is already reduced") {
  const Hypergraph h = hg(1, 1, {{1}});
  CHECK(reduce_weihe(h).graph == h);
}

TEST_CASE("find_subsumed_edge") {
  CHECK(find_subsumed_edge(hg(3, 3, {{1, 2}, {1, 2, 3}})) == 1);
  CHECK(find_subsumed_edge(hg(3, 3, {{1, 2, 3}, {1, 2}})) == 0);
  CHECK(find_subsumed_edge(hg(2, 2, {{1, 2}, {1, 2}})) == 1);  // duplicates keep the first
  CHECK_FALSE(find_subsumed_edge(hg(3, 2, {{1, 2}, {2, 3}, {1, 3}})).has_value());
  CHECK_FALSE(find_subsumed_edge(hg(1, 1, {{1}})).has_value());
}

TEST_CASE("find_dominated_vertex") {
  // In {1,2} both vertices are dominated; the partner of 2 is smaller, so 2 goes.
  CHECK(find_dominated_vertex(hg(2, 2, {{1, 2}})) == 2);
  CHECK(find_dominated_vertex(hg(3, 3, {{1, 2}, {1, 2, 3}})) == 2);
  CHECK_FALSE(find_dominated_vertex(hg(3, 2, {{1, 2}, {2, 3}, {1, 3}})).has_value());
  CHECK_FALSE(find_dominated_vertex(hg(1, 1, {{1}})).has_value());
  SUBCASE("vertices in no edge are not dominated") {
    CHECK(find_dominated_vertex(hg(5, 2, {{1, 2}})) == 2);
  }
}

TEST_CASE("fixed point") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hypergraph h = gen_random(7, 12, 3, seed);
    const Hypergraph once = reduce_weihe(h).graph;
    CHECK(reduce_weihe(once).graph == once);
    CHECK_FALSE(find_subsumed_edge(once).has_value());
    CHECK_FALSE(find_dominated_vertex(once).has_value());
  }
}

TEST_CASE("preserves the minimum hitting set size exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hypergraph h = gen_random(6 + seed % 4, 8 + seed, 2 + seed % 2, seed);
    const WeiheResult r = reduce_weihe(h);
    CHECK(*exact_min_hitting_set(r.graph, r.graph.n) == *exact_min_hitting_set(h, h.n));
  }
}

TEST_CASE("only shrinks: edges are subsets of input edges") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Hypergraph h = gen_random(7, 10, 3, seed);
    const WeiheResult r = reduce_weihe(h);
    CHECK(r.graph.edges.size() <= h.edges.size());
    for (const Edge& e : r.graph.edges) {
      const bool covered = std::any_of(h.edges.begin(), h.edges.end(), [&](const Edge& big) {
        return std::includes(big.begin(), big.end(), e.begin(), e.end());
      });
      CHECK(covered);
    }
  }
}

TEST_SUITE_END();
