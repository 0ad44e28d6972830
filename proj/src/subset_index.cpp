#include "hsk/subset_index.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hsk {

EdgeCatalog assign_edge_ids(const Hypergraph& h) {
  if (h.edges.size() > 0xffffffffULL)
    throw std::invalid_argument("more than 2^32-1 edges unsupported");
  return EdgeCatalog{static_cast<std::uint32_t>(h.edges.size())};
}

namespace {

void check_enumerable(const Hypergraph& h) {
  for (const Edge& e : h.edges)
    if (e.size() > 30)
      throw std::invalid_argument("edge size exceeds 30, full subset enumeration unsupported");
}

// Stable counting sort of `perm` by key(row), key values < alphabet.
// `tmp` and `counts` are scratch buffers reused across passes.
template <class KeyFn>
void counting_pass(std::vector<std::uint32_t>& perm, std::vector<std::uint32_t>& tmp,
                   std::vector<std::uint32_t>& counts, std::uint32_t alphabet, KeyFn key) {
  counts.assign(alphabet, 0);
  for (std::uint32_t r : perm) ++counts[key(r)];
  std::uint32_t sum = 0;
  for (std::uint32_t& c : counts) {
    const std::uint32_t here = c;
    c = sum;
    sum += here;
  }
  tmp.resize(perm.size());
  for (std::uint32_t r : perm) tmp[counts[key(r)]++] = r;
  perm.swap(tmp);
}

}  // namespace

CodeList enumerate_subset_list(const Hypergraph& h, const EdgeCatalog& cat) {
  check_enumerable(h);
  const std::uint32_t pad = pad_value(h);
  std::uint64_t rows = 0;
  for (const Edge& e : h.edges) rows += std::uint64_t{1} << e.size();
  if (rows > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("subset list exceeds 2^32-1 rows");

  CodeList list;
  list.width = h.d;
  list.alphabet = pad + 1;
  list.codes.resize(rows * h.d, pad);
  list.eids.reserve(rows);
  list.masks.reserve(rows);

  std::size_t row = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::uint32_t eid = cat.eid_of(i);
    const std::uint64_t top = std::uint64_t{1} << e.size();
    for (std::uint64_t mask = 0; mask < top; ++mask, ++row) {
      std::uint32_t* slot = list.codes.data() + row * h.d;
      for (std::size_t j = 0; j < e.size(); ++j)
        if (mask >> j & 1) *slot++ = e[j];
      list.eids.push_back(eid);
      list.masks.push_back(mask);
    }
  }
  return list;
}

void radix_sort_codes(CodeList& list) {
  const std::size_t rows = list.rows();
  std::vector<std::uint32_t> perm(rows);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> tmp;
  std::vector<std::uint32_t> counts;
  for (std::uint32_t col = list.width; col-- > 0;)
    counting_pass(perm, tmp, counts, list.alphabet,
                  [&](std::uint32_t r) { return list.codes[std::size_t{r} * list.width + col]; });

  std::vector<std::uint32_t> codes(rows * list.width);
  std::vector<std::uint32_t> eids(rows);
  std::vector<std::uint64_t> masks(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint32_t src = perm[r];
    std::memcpy(codes.data() + r * list.width, list.codes.data() + std::size_t{src} * list.width,
                list.width * sizeof(std::uint32_t));
    eids[r] = list.eids[src];
    masks[r] = list.masks[src];
  }
  list.codes.swap(codes);
  list.eids.swap(eids);
  list.masks.swap(masks);
}

SubsetCatalog build_subset_catalog(const Hypergraph& h, const EdgeCatalog& cat) {
  CodeList list = enumerate_subset_list(h, cat);
  radix_sort_codes(list);

  SubsetCatalog sc;
  sc.offsets.resize(h.edges.size() + 1);
  sc.offsets[0] = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    sc.offsets[i + 1] = sc.offsets[i] + (std::uint64_t{1} << h.edges[i].size());
  sc.sids.resize(list.rows());

  // Scan the sorted list, bumping the id at every new code.
  std::uint32_t sid = list.rows() == 0 ? 0 : 1;
  for (std::size_t r = 0; r < list.rows(); ++r) {
    if (r > 0 && std::memcmp(list.codes.data() + r * list.width,
                             list.codes.data() + (r - 1) * list.width,
                             list.width * sizeof(std::uint32_t)) != 0)
      ++sid;
    sc.sids[sc.flat_pos(list.eids[r], list.masks[r])] = sid;
  }
  sc.subset_count = sid;
  return sc;
}

LocalCatalog build_local_catalog(const Hypergraph& h, const EdgeCatalog& cat,
                                 const SubsetCatalog& sc) {
  check_enumerable(h);
  // Quadruple list: one row per (subset s of edge e, vertex v in e minus s),
  // carrying sid and v as sort keys plus the flat (edge, subset) position and
  // the rank of v within e minus s for O(1) placement after the scan.
  std::uint64_t total = 0;
  for (const Edge& e : h.edges)
    total += std::uint64_t{e.size()} << (e.size() - (e.empty() ? 0 : 1));
  if (total > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("local index list exceeds 2^32-1 rows");

  std::vector<std::uint32_t> q_sid(total);
  std::vector<std::uint32_t> q_v(total);
  std::vector<std::uint64_t> q_pos(total);
  std::vector<std::uint8_t> q_rank(total);

  LocalCatalog lc;
  lc.local_offsets.resize(sc.sids.size() + 1);

  std::size_t row = 0;
  std::uint64_t flat = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::uint32_t eid = cat.eid_of(i);
    const std::uint64_t top = std::uint64_t{1} << e.size();
    for (std::uint64_t mask = 0; mask < top; ++mask, ++flat) {
      lc.local_offsets[flat] = row;
      const std::uint32_t sid = sc.sid_of(eid, mask);
      std::uint8_t rank = 0;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (mask >> j & 1) continue;
        q_sid[row] = sid;
        q_v[row] = e[j];
        q_pos[row] = flat;
        q_rank[row] = rank++;
        ++row;
      }
    }
  }
  lc.local_offsets[flat] = row;

  // Sort by (sid, v): counting sort by v, then by sid.
  std::vector<std::uint32_t> perm(total);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> tmp;
  std::vector<std::uint32_t> counts;
  counting_pass(perm, tmp, counts, h.n + 1, [&](std::uint32_t r) { return q_v[r]; });
  counting_pass(perm, tmp, counts, sc.subset_count + 1,
                [&](std::uint32_t r) { return q_sid[r]; });

  // Assign local indices: reset to 1 on a new sid, bump on a new vertex.
  lc.locals.resize(total);
  lc.vs_size.assign(sc.subset_count + 1, 0);
  std::uint32_t prev_sid = 0;
  std::uint32_t prev_v = 0;
  std::uint32_t vid = 0;
  for (std::uint32_t r : perm) {
    if (q_sid[r] != prev_sid) {
      prev_sid = q_sid[r];
      prev_v = q_v[r];
      vid = 1;
    } else if (q_v[r] != prev_v) {
      prev_v = q_v[r];
      ++vid;
    }
    lc.locals[lc.local_offsets[q_pos[r]] + q_rank[r]] = vid;
    lc.vs_size[prev_sid] = vid;
  }

  lc.vs_offset.resize(sc.subset_count + 2);
  lc.vs_offset[0] = lc.vs_offset[1] = 0;
  for (std::uint32_t s = 1; s <= sc.subset_count; ++s)
    lc.vs_offset[s + 1] = lc.vs_offset[s] + lc.vs_size[s];
  return lc;
}

}  // namespace hsk
