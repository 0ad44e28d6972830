// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "hsk/bounds.hpp"
#include "hsk/generators.hpp"
#include "hsk/hypergraph.hpp"
#include "hsk/kernel.hpp"
#include "hsk/kernel_impl.hpp"
#include "hsk/pipeline.hpp"
#include "hsk/weihe.hpp"

using namespace hsk;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and workloads.
constexpr int kCorpusInstances = 500;       // criterion 1 corpus size
constexpr double kCorpusTimeLimit = 60.0;   // seconds, criterion 1
constexpr int kBackendInstances = 100;      // criterion 4, per (d, k)
constexpr double kScalingRatioLimit = 15.0; // criterion 6, t(m_hi) / t(m_lo)
constexpr double kScalingTimeLimit = 120.0; // seconds, criterion 6
constexpr std::uint64_t kScalingMLow = 10000;
constexpr std::uint64_t kScalingMHigh = 100000;
constexpr int kReluctantInstances = 20;     // criterion 7
constexpr int kCvdGraphs = 100;             // criterion 8

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t pow_sat(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t bev_size_bound(std::uint32_t d, std::uint32_t k) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= d; ++i) r *= i;
  for (std::uint32_t i = 0; i <= d; ++i) r *= d;
  return r * pow_sat(k + 1, d);
}

FkConfig make_cfg(std::uint32_t k, StoreBackend store, SubsetStrategy strategy) {
  FkConfig cfg;
  cfg.k = k;
  cfg.store = store;
  cfg.strategy = strategy;
  return cfg;
}

struct CorpusOutcome {
  int c1_violations = 0;
  int c2_violations = 0;
  int c3_violations = 0;
  int c5_violations = 0;
  double seconds = 0;
};

// One sweep over the shared small-instance corpus feeds criteria 1, 2, 3 and 5.
CorpusOutcome run_corpus() {
  CorpusOutcome out;
  const auto t0 = Clock::now();
  const StoreBackend backends[] = {StoreBackend::array, StoreBackend::hash, StoreBackend::tree};
  const SubsetStrategy strategies[] = {SubsetStrategy::full(), SubsetStrategy::restricted(1)};

  for (int i = 0; i < kCorpusInstances; ++i) {
    const std::uint32_t n = 4 + i % 7;            // 4..10
    const std::uint32_t d = (i % 2) ? 3 : 2;
    const std::uint64_t m = 5 + (i * 7) % 21;     // 5..25
    const Hypergraph h = gen_random(n, m, d, 1000 + i);
    const std::uint32_t min_in = *exact_min_hitting_set(h, h.n);

    const WeiheResult w = reduce_weihe(h);
    const std::uint32_t min_w = *exact_min_hitting_set(w.graph, w.graph.n);
    if (min_w != min_in) {
      ++out.c1_violations;  // breaks equivalence for some k as well
      ++out.c5_violations;
    }
    if (reduce_weihe(w.graph).graph != w.graph) ++out.c5_violations;

    for (std::uint32_t k = 0; k <= n; ++k) {
      const bool yes_in = min_in <= k;
      for (const auto& strategy : strategies) {
        const bool full = strategy.kind == SubsetStrategy::Kind::full;
        for (const auto backend : backends) {
          const KernelResult fk = kernelize_fk(h, make_cfg(k, backend, strategy));
          if ((*exact_min_hitting_set(fk.graph, fk.graph.n) <= k) != yes_in) ++out.c1_violations;
          if (full && fk.graph.edges.size() > pow_sat(k + 1, d)) ++out.c2_violations;

          const KernelResult bev = kernelize_bev(h, make_cfg(k, backend, strategy));
          if ((*exact_min_hitting_set(bev.graph, bev.graph.n) <= k) != yes_in)
            ++out.c1_violations;
          if (bev.max_counter > k + 1) ++out.c3_violations;
          if (full && bev.graph.edges.size() > bev_size_bound(d, k)) ++out.c3_violations;
        }
      }
      const std::string spec =
          "fk:k=" + std::to_string(k) + ",bev:k=" + std::to_string(k) + ",weihe";
      const PipelineResult chained = run_pipeline(h, parse_pipeline(spec), 0);
      if ((*exact_min_hitting_set(chained.graph, chained.graph.n) <= k) != yes_in)
        ++out.c1_violations;
    }
  }
  out.seconds = seconds_since(t0);
  return out;
}

// Criterion 2's constructed part: more than (k+1)^d mutually distinct edges
// must be strictly reduced while respecting the bound.
bool constructed_fk_reduction() {
  struct Case {
    std::uint32_t n, d, k;
  };
  for (const Case c : {Case{5, 1, 2}, Case{5, 2, 1}, Case{6, 2, 2}, Case{5, 3, 1}}) {
    Hypergraph h{c.n, c.d, {}};
    std::vector<VertexId> pick(c.d);
    // All d-subsets of {1..n} in lexicographic order.
    for (std::uint32_t v = 0; v < c.d; ++v) pick[v] = v + 1;
    for (;;) {
      h.edges.push_back(pick);
      std::int32_t j = c.d - 1;
      while (j >= 0 && pick[j] == c.n - (c.d - 1 - j)) --j;
      if (j < 0) break;
      ++pick[j];
      for (std::uint32_t t = j + 1; t < c.d; ++t) pick[t] = pick[t - 1] + 1;
    }
    const std::uint64_t bound = pow_sat(c.k + 1, c.d);
    if (h.edges.size() <= bound) return false;  // case must actually exceed the bound
    const KernelResult r = kernelize_fk(h, make_cfg(c.k, StoreBackend::array, SubsetStrategy::full()));
    if (r.graph.edges.size() > bound) return false;
    if (r.graph.edges.size() >= h.edges.size()) return false;
  }
  return true;
}

// Criterion 3's constructed part: a sunflower with core {1} and d(k+1) = 4
// disjoint petals at d=2, k=1 keeps at most k+1 petal edges, and the tracked
// sunflower of core {1} ends with exactly k+1 petals, in every edge order.
bool constructed_sunflower_cut() {
  std::vector<Edge> edges{{1, 2}, {1, 3}, {1, 4}, {1, 5}};
  std::sort(edges.begin(), edges.end());
  do {
    const Hypergraph h{5, 2, edges};
    const KernelResult r = kernelize_bev(h, make_cfg(1, StoreBackend::array, SubsetStrategy::full()));
    if (r.graph.edges.size() > 2) return false;

    HashSunflowerStore store(h.d, pad_value(h));
    FkConfig cfg = make_cfg(1, StoreBackend::hash, SubsetStrategy::full());
    detail::run_bev(h, cfg, store);
    if (store.counter_get(canonical_code({1}, h.d, pad_value(h))) != 2) return false;
  } while (std::next_permutation(edges.begin(), edges.end()));
  return true;
}

bool backend_equivalence() {
  for (const std::uint32_t d : {1u, 2u, 3u}) {
    for (const std::uint32_t k : {0u, 1u, 3u}) {
      for (int i = 0; i < kBackendInstances; ++i) {
        const std::uint32_t n = 6 + i % 5;
        const std::uint64_t m = 5 + (i * 3) % 21;
        const Hypergraph h = gen_random(n, m, d, 7000 + 971 * d + 131 * k + i);
        const Hypergraph fk_a =
            kernelize_fk(h, make_cfg(k, StoreBackend::array, SubsetStrategy::full())).graph;
        if (fk_a != kernelize_fk(h, make_cfg(k, StoreBackend::hash, SubsetStrategy::full())).graph)
          return false;
        if (fk_a != kernelize_fk(h, make_cfg(k, StoreBackend::tree, SubsetStrategy::full())).graph)
          return false;
        const Hypergraph bev_a =
            kernelize_bev(h, make_cfg(k, StoreBackend::array, SubsetStrategy::full())).graph;
        if (bev_a != kernelize_bev(h, make_cfg(k, StoreBackend::hash, SubsetStrategy::full())).graph)
          return false;
        if (bev_a != kernelize_bev(h, make_cfg(k, StoreBackend::tree, SubsetStrategy::full())).graph)
          return false;
      }
    }
  }
  return true;
}

struct ScalingOutcome {
  bool cells_ok = true;
  double ratio = 0;
  double seconds = 0;
};

ScalingOutcome linear_scaling() {
  ScalingOutcome out;
  const auto t0 = Clock::now();
  const auto timed_run = [&](const Hypergraph& h, std::uint32_t k) {
    return kernelize_fk(h, make_cfg(k, StoreBackend::array, SubsetStrategy::full()));
  };

  std::uint64_t t_low = 0, t_high = 0;
  for (std::uint64_t m = kScalingMLow; m <= kScalingMHigh; m += kScalingMLow) {
    const Hypergraph h = gen_random(100, m, 3, 42);
    const std::uint32_t k = greedy_upper_bound(h).k;  // outside the timed region
    KernelResult r = timed_run(h, k);
    if (r.stats.peak_store_cells > 8 * 3 * m) out.cells_ok = false;  // 2^d * d * m, d = 3
    if (m == kScalingMLow || m == kScalingMHigh) {
      std::uint64_t best = r.stats.wall_time_ns;
      for (int rep = 0; rep < 2; ++rep)
        best = std::min(best, timed_run(h, k).stats.wall_time_ns);
      (m == kScalingMLow ? t_low : t_high) = best;
    }
  }
  out.ratio = double(t_high) / double(t_low);
  out.seconds = seconds_since(t0);
  return out;
}

bool reluctant_instances() {
  for (int i = 0; i < kReluctantInstances; ++i) {
    const Hypergraph h = gen_random(100, 10000, 3, 300 + i);

    Hypergraph expected{h.n, h.d, {}};
    std::set<Edge> seen;
    for (const Edge& e : h.edges)
      if (seen.insert(e).second) expected.edges.push_back(e);

    const std::uint32_t k = greedy_upper_bound(h).k;
    const Hypergraph fk =
        kernelize_fk(h, make_cfg(k, StoreBackend::array, SubsetStrategy::full())).graph;
    const Hypergraph bev =
        kernelize_bev(h, make_cfg(k, StoreBackend::array, SubsetStrategy::full())).graph;
    const Hypergraph wei = reduce_weihe(h).graph;
    if (fk != expected || bev != expected || wei != expected) return false;
  }
  return true;
}

bool cvd_counts() {
  const Graph p4 = parse_graph("p graph 4 3\n1 2\n2 3\n3 4\n");
  if (cvd_to_hs3(p4).edges != std::vector<Edge>{{1, 2, 3}, {2, 3, 4}}) return false;
  const Graph triangle = parse_graph("p graph 3 3\n1 2\n2 3\n1 3\n");
  if (!cvd_to_hs3(triangle).edges.empty()) return false;
  const Graph star = parse_graph("p graph 4 3\n1 2\n1 3\n1 4\n");
  if (cvd_to_hs3(star).m() != 3) return false;

  for (int i = 0; i < kCvdGraphs; ++i) {
    Graph g;
    g.n = 4 + i % 5;  // up to 8
    g.adj.assign(g.n + 1, {});
    std::mt19937_64 rng(900 + i);
    for (VertexId u = 1; u <= g.n; ++u)
      for (VertexId v = u + 1; v <= g.n; ++v)
        if (uniform_below(rng, 2) == 1) {
          g.adj[u].push_back(v);
          g.adj[v].push_back(u);
        }

    std::set<Edge> expected;
    for (VertexId a = 1; a <= g.n; ++a)
      for (VertexId b = a + 1; b <= g.n; ++b)
        for (VertexId c = b + 1; c <= g.n; ++c) {
          const int adj =
              int(g.has_edge(a, b)) + int(g.has_edge(a, c)) + int(g.has_edge(b, c));
          if (adj == 2) expected.insert({a, b, c});
        }
    const Hypergraph h = cvd_to_hs3(g);
    if (h.m() != expected.size()) return false;
    if (std::set<Edge>(h.edges.begin(), h.edges.end()) != expected) return false;
  }
  return true;
}

bool hand_traces() {
  const Hypergraph fk_in{3, 1, {{1}, {2}, {3}, {1}}};
  const KernelResult fk = kernelize_fk(fk_in, make_cfg(1, StoreBackend::array, SubsetStrategy::full()));
  if (fk.graph.edges != std::vector<Edge>{{1}, {2}}) return false;
  if (fk.stats.edges_in != 4 || fk.stats.edges_out != 2) return false;

  const Hypergraph star{4, 2, {{1, 2}, {1, 3}, {1, 4}}};
  if (kernelize_bev(star, make_cfg(1, StoreBackend::array, SubsetStrategy::full())).graph.edges !=
      std::vector<Edge>{{1, 2}, {1, 3}})
    return false;
  const Hypergraph disjoint{4, 2, {{1, 2}, {3, 4}}};
  if (kernelize_bev(disjoint, make_cfg(0, StoreBackend::array, SubsetStrategy::full())).graph.edges !=
      std::vector<Edge>{{1, 2}})
    return false;

  const WeiheResult wei = reduce_weihe(Hypergraph{3, 3, {{1, 2}, {1, 2, 3}}});
  if (wei.graph.edges != std::vector<Edge>{{1}}) return false;
  if (wei.stats.edges_in != 2 || wei.stats.edges_out != 1) return false;
  const Hypergraph triangle{3, 2, {{1, 2}, {2, 3}, {1, 3}}};
  if (reduce_weihe(triangle).graph != triangle) return false;
  const Hypergraph lone{1, 1, {{1}}};
  if (reduce_weihe(lone).graph != lone) return false;

  const Hypergraph tri_hs{3, 2, {{1, 2}, {1, 3}, {2, 3}}};
  const GreedyBound gb = greedy_upper_bound(tri_hs);
  if (gb.k != 2 || gb.vertices != std::vector<VertexId>{1, 2}) return false;
  const GreedyBound sb = greedy_upper_bound(star);
  if (sb.k != 1 || sb.vertices != std::vector<VertexId>{1}) return false;
  if (*exact_min_hitting_set(Hypergraph{4, 2, {}}, 4) != 0) return false;
  if (*exact_min_hitting_set(tri_hs, 3) != 2) return false;
  if (*exact_min_hitting_set(Hypergraph{6, 2, {{1, 2}, {3, 4}, {5, 6}}}, 6) != 3) return false;
  if (verify_hitting_set(tri_hs, std::vector<VertexId>{1})) return false;
  if (!verify_hitting_set(tri_hs, std::vector<VertexId>{1, 2})) return false;
  return true;
}

}  // namespace

int main() {
  const CorpusOutcome corpus = run_corpus();

  report(1, corpus.c1_violations == 0 && corpus.seconds < kCorpusTimeLimit,
         "oracle equivalence over " + std::to_string(kCorpusInstances) +
             " instances, all k, all reducers and backends (" +
             std::to_string(corpus.c1_violations) + " violations, " +
             std::to_string(corpus.seconds) + " s)");

  const bool c2_constructed = constructed_fk_reduction();
  report(2, corpus.c2_violations == 0 && c2_constructed,
         "counting kernel size bound (k+1)^d and strict reduction on oversized inputs (" +
             std::to_string(corpus.c2_violations) + " violations)");

  const bool c3_constructed = constructed_sunflower_cut();
  report(3, corpus.c3_violations == 0 && c3_constructed,
         "sunflower petal bound k+1, size bound, and k+1-petal cut on a 4-petal sunflower (" +
             std::to_string(corpus.c3_violations) + " violations)");

  report(4, backend_equivalence(),
         "array, hash and tree backends produce identical output on " +
             std::to_string(kBackendInstances) + " instances per (d, k)");

  report(5, corpus.c5_violations == 0,
         "subsumption/dominance reduction is a fixed point and preserves the optimum (" +
             std::to_string(corpus.c5_violations) + " violations)");

  const ScalingOutcome scaling = linear_scaling();
  report(6,
         scaling.cells_ok && scaling.ratio <= kScalingRatioLimit &&
             scaling.seconds < kScalingTimeLimit,
         "counting kernel scales linearly, t(100k)/t(10k) = " + std::to_string(scaling.ratio) +
             " <= " + std::to_string(kScalingRatioLimit) + ", cells within 2^d*d*m (" +
             std::to_string(scaling.seconds) + " s)");

  report(7, reluctant_instances(),
         "on dense random instances all reducers remove exactly the duplicate edges and agree");

  report(8, cvd_counts(),
         "induced-path triples match hand counts and brute-force enumeration");

  report(9, hand_traces(), "worked examples reproduce exactly");

  return failures == 0 ? 0 : 1;
}
