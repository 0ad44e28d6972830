#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hsk/hypergraph.hpp"
#include "hsk/subset_index.hpp"

namespace hsk {

enum class StoreBackend { array, hash, tree };

std::string_view to_string(StoreBackend b);
StoreBackend parse_store_backend(std::string_view name);  // throws std::invalid_argument

struct CodeHash {
  using is_transparent = void;
  std::size_t operator()(std::span<const std::uint32_t> slots) const {
    std::size_t x = 1469598103934665603ULL;
    for (std::uint32_t s : slots) {
      x ^= s;
      x *= 1099511628211ULL;
    }
    return x;
  }
  std::size_t operator()(const CanonicalCode& c) const { return (*this)(c.slots()); }
};

struct CodeEq {
  using is_transparent = void;
  bool operator()(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  bool operator()(const CanonicalCode& a, const CanonicalCode& b) const {
    return (*this)(a.slots(), b.slots());
  }
  bool operator()(const CanonicalCode& a, std::span<const std::uint32_t> b) const {
    return (*this)(a.slots(), b);
  }
  bool operator()(std::span<const std::uint32_t> a, const CanonicalCode& b) const {
    return (*this)(a, b.slots());
  }
};

struct CodeLess {
  using is_transparent = void;
  bool operator()(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
  bool operator()(const CanonicalCode& a, const CanonicalCode& b) const {
    return (*this)(a.slots(), b.slots());
  }
  bool operator()(const CanonicalCode& a, std::span<const std::uint32_t> b) const {
    return (*this)(a.slots(), b);
  }
  bool operator()(std::span<const std::uint32_t> a, const CanonicalCode& b) const {
    return (*this)(a, b.slots());
  }
};

/// Counter store over subset ids; all cells preallocated at construction,
/// no allocation afterwards. Counters hold values up to m+1.
class ArrayCounterStore {
 public:
  struct Ref {
    std::uint32_t sid;
  };

  ArrayCounterStore(const SubsetCatalog& catalog, bool track_kept)
      : catalog_(&catalog),
        counters_(catalog.subset_count + 1, 0),
        kept_(track_kept ? catalog.subset_count + 1 : 0, 0) {}

  Ref subset_ref(const Edge&, std::uint32_t eid, std::uint64_t mask) const {
    return {catalog_->sid_of(eid, mask)};
  }
  std::uint32_t counter(Ref r) const { return counters_[r.sid]; }
  std::uint32_t increment(Ref r) { return ++counters_[r.sid]; }
  bool kept(Ref r) const { return !kept_.empty() && kept_[r.sid]; }
  void mark_kept(Ref r) { kept_[r.sid] = 1; }

  // Checked single-cell access, keyed by subset id.
  std::uint32_t counter_get(std::uint32_t sid) const { return counters_[checked(sid)]; }
  std::uint32_t counter_increment(std::uint32_t sid) { return ++counters_[checked(sid)]; }

  std::uint64_t counter_cells() const { return counters_.size() - 1; }
  std::uint64_t kept_cells() const { return kept_.empty() ? 0 : kept_.size() - 1; }
  std::uint64_t used_cells() const { return 0; }
  std::uint64_t cells() const { return counter_cells() + kept_cells(); }
  std::uint32_t max_counter() const {
    std::uint32_t best = 0;
    for (std::size_t i = 1; i < counters_.size(); ++i) best = std::max(best, counters_[i]);
    return best;
  }
  const std::uint32_t* counter_data() const { return counters_.data(); }

 protected:
  std::uint32_t checked(std::uint32_t sid) const {
    if (sid == 0 || sid > catalog_->subset_count)
      throw std::out_of_range("subset id " + std::to_string(sid) + " out of range");
    return sid;
  }
  const SubsetCatalog* catalog_;

 private:
  std::vector<std::uint32_t> counters_;
  std::vector<std::uint8_t> kept_;
};

/// Counter store keyed by canonical codes (fixed width, pad = n+1) held in an
/// associative map. Grows on demand; cell counts report distinct keys.
template <class Map, class Set>
class MapCounterStore {
 public:
  struct Ref {
    std::span<const std::uint32_t> code;
  };

  MapCounterStore(std::uint32_t width, std::uint32_t pad)
      : width_(width), pad_(pad), scratch_(width, pad) {}

  Ref subset_ref(const Edge& e, std::uint32_t, std::uint64_t mask) {
    std::uint32_t* slot = scratch_.data();
    for (std::size_t j = 0; j < e.size(); ++j)
      if (mask >> j & 1) *slot++ = e[j];
    while (slot != scratch_.data() + width_) *slot++ = pad_;
    return {scratch_};
  }
  std::uint32_t counter(Ref r) const {
    const auto it = counters_.find(r.code);
    return it == counters_.end() ? 0 : it->second;
  }
  std::uint32_t increment(Ref r) {
    const auto it = counters_.find(r.code);
    if (it != counters_.end()) return ++it->second;
    counters_.emplace(materialize(r.code), 1);
    return 1;
  }
  bool kept(Ref r) const { return kept_.find(r.code) != kept_.end(); }
  void mark_kept(Ref r) { kept_.insert(materialize(r.code)); }

  std::uint32_t counter_get(const CanonicalCode& c) const { return counter(Ref{c.slots()}); }
  std::uint32_t counter_increment(const CanonicalCode& c) { return increment(Ref{c.slots()}); }

  std::uint64_t counter_cells() const { return counters_.size(); }
  std::uint64_t kept_cells() const { return kept_.size(); }
  std::uint64_t used_cells() const { return 0; }
  std::uint64_t cells() const { return counter_cells() + kept_cells(); }
  std::uint32_t max_counter() const {
    std::uint32_t best = 0;
    for (const auto& [code, value] : counters_) best = std::max(best, value);
    return best;
  }

 private:
  CanonicalCode materialize(std::span<const std::uint32_t> code) const {
    return CanonicalCode(std::vector<std::uint32_t>(code.begin(), code.end()));
  }
  std::uint32_t width_;
  std::uint32_t pad_;
  std::vector<std::uint32_t> scratch_;
  Map counters_;
  Set kept_;
};

using HashCounterStore =
    MapCounterStore<std::unordered_map<CanonicalCode, std::uint32_t, CodeHash, CodeEq>,
                    std::unordered_set<CanonicalCode, CodeHash, CodeEq>>;
using TreeCounterStore =
    MapCounterStore<std::map<CanonicalCode, std::uint32_t, CodeLess>,
                    std::set<CanonicalCode, CodeLess>>;

/// Sunflower store: petal counters plus per-subset vertex flags. The array
/// backend addresses flags by local vertex index (1..|V^s| per subset) using
/// the local catalog; everything is preallocated.
class ArraySunflowerStore : public ArrayCounterStore {
 public:
  struct Ref {
    std::uint32_t sid;
    std::span<const std::uint32_t> locals;
  };

  ArraySunflowerStore(const SubsetCatalog& catalog, const LocalCatalog& local, bool track_kept)
      : ArrayCounterStore(catalog, track_kept),
        local_(&local),
        flags_(local.flag_cells(), 0) {}

  Ref subset_ref(const Edge&, std::uint32_t eid, std::uint64_t mask) const {
    const std::uint64_t pos = catalog_->flat_pos(eid, mask);
    return {catalog_->sids[pos], local_->locals_of(pos)};
  }
  std::uint32_t counter(Ref r) const { return ArrayCounterStore::counter({r.sid}); }
  std::uint32_t increment(Ref r) { return ArrayCounterStore::increment({r.sid}); }
  bool kept(Ref r) const { return ArrayCounterStore::kept({r.sid}); }
  void mark_kept(Ref r) { ArrayCounterStore::mark_kept({r.sid}); }
  bool used(Ref r, std::uint32_t rank, VertexId) const {
    return flags_[local_->vs_offset[r.sid] + r.locals[rank] - 1];
  }
  void mark_used(Ref r, std::uint32_t rank, VertexId) {
    flags_[local_->vs_offset[r.sid] + r.locals[rank] - 1] = 1;
  }

  // Checked flag access, keyed by (subset id, local vertex index).
  bool flag_get(std::uint32_t sid, std::uint32_t local) const {
    return flags_[flag_cell(sid, local)];
  }
  void flag_set(std::uint32_t sid, std::uint32_t local) { flags_[flag_cell(sid, local)] = 1; }

  std::uint64_t used_cells() const { return flags_.size(); }
  std::uint64_t cells() const { return counter_cells() + kept_cells() + used_cells(); }
  const std::uint8_t* flag_data() const { return flags_.data(); }

 private:
  std::uint64_t flag_cell(std::uint32_t sid, std::uint32_t local) const {
    checked(sid);
    if (local == 0 || local > local_->vs_size[sid])
      throw std::out_of_range("local vertex index " + std::to_string(local) +
                              " out of range for subset " + std::to_string(sid));
    return local_->vs_offset[sid] + local - 1;
  }
  const LocalCatalog* local_;
  std::vector<std::uint8_t> flags_;
};

/// Petal counter plus the set of vertices already consumed by a petal.
struct SunflowerCell {
  std::uint32_t petals = 0;
  std::vector<VertexId> used;  // sorted
};

/// Sunflower store over canonical codes; flags are keyed by (code, vertex).
template <class Map, class Set>
class MapSunflowerStore {
 public:
  struct Ref {
    std::span<const std::uint32_t> code;
  };

  MapSunflowerStore(std::uint32_t width, std::uint32_t pad)
      : width_(width), pad_(pad), scratch_(width, pad) {}

  Ref subset_ref(const Edge& e, std::uint32_t, std::uint64_t mask) {
    std::uint32_t* slot = scratch_.data();
    for (std::size_t j = 0; j < e.size(); ++j)
      if (mask >> j & 1) *slot++ = e[j];
    while (slot != scratch_.data() + width_) *slot++ = pad_;
    return {scratch_};
  }
  std::uint32_t counter(Ref r) const {
    const auto it = cells_.find(r.code);
    return it == cells_.end() ? 0 : it->second.petals;
  }
  std::uint32_t increment(Ref r) { return ++cell(r.code).petals; }
  bool kept(Ref r) const { return kept_.find(r.code) != kept_.end(); }
  void mark_kept(Ref r) { kept_.insert(materialize(r.code)); }
  bool used(Ref r, std::uint32_t, VertexId v) const {
    const auto it = cells_.find(r.code);
    if (it == cells_.end()) return false;
    const auto& u = it->second.used;
    return std::binary_search(u.begin(), u.end(), v);
  }
  void mark_used(Ref r, std::uint32_t, VertexId v) {
    auto& u = cell(r.code).used;
    const auto it = std::lower_bound(u.begin(), u.end(), v);
    if (it == u.end() || *it != v) u.insert(it, v);
  }

  std::uint32_t counter_get(const CanonicalCode& c) const { return counter(Ref{c.slots()}); }
  std::uint32_t counter_increment(const CanonicalCode& c) { return increment(Ref{c.slots()}); }
  bool flag_get(const CanonicalCode& c, VertexId v) const { return used(Ref{c.slots()}, 0, v); }
  void flag_set(const CanonicalCode& c, VertexId v) { mark_used(Ref{c.slots()}, 0, v); }

  std::uint64_t counter_cells() const { return cells_.size(); }
  std::uint64_t kept_cells() const { return kept_.size(); }
  std::uint64_t used_cells() const {
    std::uint64_t total = 0;
    for (const auto& [code, cell] : cells_) total += cell.used.size();
    return total;
  }
  std::uint64_t cells() const { return counter_cells() + kept_cells() + used_cells(); }
  std::uint32_t max_counter() const {
    std::uint32_t best = 0;
    for (const auto& [code, cell] : cells_) best = std::max(best, cell.petals);
    return best;
  }

 private:
  SunflowerCell& cell(std::span<const std::uint32_t> code) {
    const auto it = cells_.find(code);
    if (it != cells_.end()) return it->second;
    return cells_.emplace(materialize(code), SunflowerCell{}).first->second;
  }
  CanonicalCode materialize(std::span<const std::uint32_t> code) const {
    return CanonicalCode(std::vector<std::uint32_t>(code.begin(), code.end()));
  }
  std::uint32_t width_;
  std::uint32_t pad_;
  std::vector<std::uint32_t> scratch_;
  Map cells_;
  Set kept_;
};

using HashSunflowerStore =
    MapSunflowerStore<std::unordered_map<CanonicalCode, SunflowerCell, CodeHash, CodeEq>,
                      std::unordered_set<CanonicalCode, CodeHash, CodeEq>>;
using TreeSunflowerStore =
    MapSunflowerStore<std::map<CanonicalCode, SunflowerCell, CodeLess>,
                      std::set<CanonicalCode, CodeLess>>;

}  // namespace hsk
