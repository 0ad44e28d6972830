#include "hsk/kernel.hpp"

#include <chrono>

#include "hsk/kernel_impl.hpp"
#include "hsk/subset_index.hpp"

namespace hsk {

namespace detail {

namespace {

void push_small_subsets(std::size_t edge_size, std::uint32_t max_size,
                        std::vector<std::uint64_t>& out) {
  // All position masks of popcount <= max_size, built by extending each
  // emitted mask with a higher bit while room remains.
  out.push_back(0);
  std::size_t begin = out.size() - 1;
  for (std::uint32_t round = 0; round < max_size; ++round) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t base = out[i];
      const std::size_t low = base == 0 ? 0 : 64 - std::countl_zero(base);
      for (std::size_t p = low; p < edge_size; ++p) out.push_back(base | std::uint64_t{1} << p);
    }
    begin = end;
  }
}

std::uint64_t intersection_mask(const Edge& e, const Edge& other) {
  std::uint64_t mask = 0;
  std::size_t i = 0, j = 0;
  while (i < e.size() && j < other.size()) {
    if (e[i] == other[j]) {
      mask |= std::uint64_t{1} << i;
      ++i;
      ++j;
    } else if (e[i] < other[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return mask;
}

}  // namespace

void subset_family(const Edge& e, const SubsetStrategy& strategy,
                   const std::vector<Edge>& kept, std::vector<std::uint64_t>& out) {
  out.clear();
  if (strategy.kind == SubsetStrategy::Kind::full) {
    if (e.size() > 30)
      throw std::invalid_argument("edge size exceeds 30, full subset enumeration unsupported");
    const std::uint64_t top = std::uint64_t{1} << e.size();
    out.reserve(top);
    for (std::uint64_t mask = 0; mask < top; ++mask) out.push_back(mask);
    return;
  }
  if (e.size() > 64)
    throw std::invalid_argument("edge size exceeds 64, restricted strategy unsupported");
  push_small_subsets(e.size(), std::min<std::uint32_t>(strategy.max_small_size,
                                                       static_cast<std::uint32_t>(e.size())),
                     out);
  out.push_back(full_mask(e));
  for (const Edge& other : kept) out.push_back(intersection_mask(e, other));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace detail

std::uint64_t fk_threshold(std::uint64_t k, std::uint32_t d, std::uint32_t s_size,
                           std::uint64_t cap) {
  if (s_size > d) throw std::invalid_argument("subset size exceeds d");
  const std::uint64_t base = k + 1;
  std::uint64_t r = 1;
  for (std::uint32_t i = s_size; i < d; ++i) {
    if (r > cap / base) return cap;
    r *= base;
    if (r >= cap) return cap;
  }
  return r;
}

std::string describe_config(const FkConfig& cfg) {
  std::string s = "k=" + std::to_string(cfg.k) + ",store=" + std::string(to_string(cfg.store));
  if (cfg.strategy.kind == SubsetStrategy::Kind::full)
    s += ",strategy=full";
  else
    s += ",strategy=restricted(" + std::to_string(cfg.strategy.max_small_size) + ")";
  if (!cfg.superset_removal) s += ",nosuperset";
  return s;
}

namespace {

void validate_config(const Hypergraph& h, const FkConfig& cfg) {
  if (cfg.strategy.kind == SubsetStrategy::Kind::restricted &&
      cfg.strategy.max_small_size > h.d)
    throw std::invalid_argument("restricted subset size bound " +
                                std::to_string(cfg.strategy.max_small_size) + " exceeds d=" +
                                std::to_string(h.d));
}

template <class Store>
KernelResult finish(const char* name, Hypergraph out, const Hypergraph& in, const FkConfig& cfg,
                    const Store& store, std::uint64_t catalog_entries,
                    std::chrono::steady_clock::time_point t0) {
  KernelResult r;
  r.graph = std::move(out);
  r.max_counter = store.max_counter();
  r.stats.stage = name;
  r.stats.parameters = describe_config(cfg);
  r.stats.edges_in = in.m();
  r.stats.edges_out = r.graph.m();
  r.stats.vertices_out = r.graph.vertex_support();
  r.stats.k_used = cfg.k;
  r.stats.peak_store_cells = store.cells() + catalog_entries;
  r.stats.wall_time_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  return r;
}

}  // namespace

KernelResult kernelize_fk(const Hypergraph& h, const FkConfig& cfg) {
  validate_config(h, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  switch (cfg.store) {
    case StoreBackend::array: {
      const EdgeCatalog ec = assign_edge_ids(h);
      const SubsetCatalog sc = build_subset_catalog(h, ec);
      ArrayCounterStore store(sc, cfg.superset_removal);
      Hypergraph out = detail::run_fk(h, cfg, store);
      return finish("fk", std::move(out), h, cfg, store, sc.entry_count(), t0);
    }
    case StoreBackend::hash: {
      HashCounterStore store(h.d, pad_value(h));
      Hypergraph out = detail::run_fk(h, cfg, store);
      return finish("fk", std::move(out), h, cfg, store, 0, t0);
    }
    case StoreBackend::tree: {
      TreeCounterStore store(h.d, pad_value(h));
      Hypergraph out = detail::run_fk(h, cfg, store);
      return finish("fk", std::move(out), h, cfg, store, 0, t0);
    }
  }
  throw std::logic_error("unreachable");
}

KernelResult kernelize_bev(const Hypergraph& h, const FkConfig& cfg) {
  validate_config(h, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  switch (cfg.store) {
    case StoreBackend::array: {
      const EdgeCatalog ec = assign_edge_ids(h);
      const SubsetCatalog sc = build_subset_catalog(h, ec);
      const LocalCatalog lc = build_local_catalog(h, ec, sc);
      ArraySunflowerStore store(sc, lc, cfg.superset_removal);
      Hypergraph out = detail::run_bev(h, cfg, store);
      return finish("bev", std::move(out), h, cfg, store, sc.entry_count() + lc.entry_count(),
                    t0);
    }
    case StoreBackend::hash: {
      HashSunflowerStore store(h.d, pad_value(h));
      Hypergraph out = detail::run_bev(h, cfg, store);
      return finish("bev", std::move(out), h, cfg, store, 0, t0);
    }
    case StoreBackend::tree: {
      TreeSunflowerStore store(h.d, pad_value(h));
      Hypergraph out = detail::run_bev(h, cfg, store);
      return finish("bev", std::move(out), h, cfg, store, 0, t0);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace hsk
