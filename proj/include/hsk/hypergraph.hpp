#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsk {

using VertexId = std::uint32_t;

// An edge is a sorted list of distinct vertex ids in 1..n.
using Edge = std::vector<VertexId>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hypergraph over the universe {1..n} with edges of size at most d.
/// Instances produced by this library always satisfy the invariants below;
/// validate() checks them for externally built objects.
struct Hypergraph {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::vector<Edge> edges;

  std::size_t m() const { return edges.size(); }

  /// Throws std::invalid_argument unless every edge is non-empty, sorted,
  /// duplicate-free, within 1..n and of size at most d.
  void validate() const;

  /// Number of distinct vertices occurring in edges.
  std::uint64_t vertex_support() const;

  bool operator==(const Hypergraph&) const = default;
};

/// Fixed-width subset code: the subset's vertices in ascending order,
/// right-padded with the pad value to exactly `width` slots. With
/// pad = n + 1 the map subset -> code is injective over all subsets of
/// size at most `width` and codes compare lexicographically.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint32_t> slots) : slots_(std::move(slots)) {}

  std::span<const std::uint32_t> slots() const { return slots_; }
  std::uint32_t width() const { return static_cast<std::uint32_t>(slots_.size()); }

  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::vector<std::uint32_t> slots_;
};

/// Builds the canonical code of a subset. The input need not be sorted;
/// duplicate mentions of a vertex are collapsed. Throws std::invalid_argument
/// if the subset has more than `width` distinct vertices or contains a vertex
/// >= pad.
CanonicalCode canonical_code(std::vector<VertexId> subset, std::uint32_t width,
                             std::uint32_t pad);

/// Pad value used throughout: one past the largest vertex id.
inline std::uint32_t pad_value(const Hypergraph& h) { return h.n + 1; }

/// Parses the .hgr format:
///   c <comment>            (optional, anywhere)
///   p hs <n> <m> <d>
///   <m lines of space-separated vertex ids, each a non-empty edge>
/// Vertex order within a line is normalized to ascending. Throws ParseError
/// on malformed headers, out-of-range or duplicate vertices, empty edges,
/// oversized edges and edge-count mismatches.
Hypergraph parse_hgr(std::string_view text);

/// Serializes to .hgr, bit-exact: header line, one line per edge with
/// single spaces, every line newline-terminated, no trailing whitespace.
std::string write_hgr(const Hypergraph& h);

/// Draws uniformly from {0, ..., bound-1} by rejection sampling, so results
/// depend only on the mt19937_64 stream and are identical across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Fisher-Yates shuffle of the edge list seeded with `seed`; vertices and
/// edge contents are untouched. Deterministic for a fixed seed.
Hypergraph shuffle_edges(const Hypergraph& h, std::uint64_t seed);

}  // namespace hsk
