#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsk/hypergraph.hpp"
#include "hsk/kernel.hpp"
#include "hsk/stats.hpp"

namespace hsk {

struct PipelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One stage of a reduction pipeline. For kernel stages a missing k is
/// filled in per run from the greedy upper bound of the stage's input; a
/// missing shuffle seed derives from the pipeline seed and the stage index.
struct PipelineStage {
  enum class Kind { shuffle, fk, bev, weihe };
  Kind kind = Kind::weihe;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> k;
  StoreBackend store = StoreBackend::array;
  SubsetStrategy strategy{};
  bool superset_removal = true;
  std::string text;  // the stage as written, for stats and errors
};

struct PipelineSpec {
  std::vector<PipelineStage> stages;
};

/// Grammar: pipeline := stage ("," stage)*
///   stage   := "shuffle" [":seed=" INT]
///            | ("fk"|"bev") (":" kparam)*
///            | "weihe"
///   kparam  := "k=" INT | "store=" ("array"|"hash"|"tree")
///            | "strategy=" ("full" | "restricted(" INT ")") | "nosuperset"
/// Unknown or repeated parameters are rejected. Throws PipelineError.
PipelineSpec parse_pipeline(std::string_view text);

struct PipelineResult {
  Hypergraph graph;
  std::vector<ReductionStats> stages;
};

/// Applies the stages left to right. Stage failures are rethrown with the
/// 1-based stage index prepended.
PipelineResult run_pipeline(const Hypergraph& h, const PipelineSpec& spec, std::uint64_t seed);

/// Stats as a JSON array, integers exact.
std::string stats_to_json(const std::vector<ReductionStats>& stages);

}  // namespace hsk
