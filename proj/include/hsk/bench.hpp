#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsk {

/// Parsed sweep description. File grammar, one `key = value` per line
/// (# and c comments allowed):
///   n = 100                 single value
///   d = 2 3                 list, space or comma separated
///   m = 1000 2000
///   seeds = 1 2 3
///   pipeline = shuffle,fk   repeatable, one pipeline per line
struct SweepConfig {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> d_values;
  std::vector<std::uint64_t> m_values;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> pipelines;
  unsigned jobs = 1;  // worker threads, set by the caller
};

SweepConfig parse_sweep(std::string_view text);  // throws ParseError

/// Generates one random instance per (d, m, seed) cell and runs every
/// pipeline on it, one CSV row per stage. Rows are emitted in canonical
/// (d, m, seed, pipeline, stage) order regardless of worker count; all
/// numbers are integers, time in nanoseconds.
std::string bench_sweep(const SweepConfig& config);

}  // namespace hsk
