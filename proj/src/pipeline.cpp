#include "hsk/pipeline.hpp"

#include <charconv>
#include <chrono>

#include <nlohmann/json.hpp>

#include "hsk/bounds.hpp"
#include "hsk/weihe.hpp"

namespace hsk {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::uint64_t parse_stage_uint(std::string_view token, std::string_view stage) {
  std::uint64_t value = 0;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last)
    throw PipelineError("invalid pipeline: malformed number '" + std::string(token) + "' in '" +
                        std::string(stage) + "'");
  return value;
}

PipelineStage parse_stage(std::string_view text) {
  const auto parts = split(text, ':');
  PipelineStage stage;
  stage.text = std::string(text);
  const std::string_view kind = parts[0];
  if (kind == "shuffle")
    stage.kind = PipelineStage::Kind::shuffle;
  else if (kind == "fk")
    stage.kind = PipelineStage::Kind::fk;
  else if (kind == "bev")
    stage.kind = PipelineStage::Kind::bev;
  else if (kind == "weihe")
    stage.kind = PipelineStage::Kind::weihe;
  else
    throw PipelineError("invalid pipeline: unknown stage '" + std::string(kind) + "'");

  bool saw_k = false, saw_store = false, saw_strategy = false, saw_nosuperset = false,
       saw_seed = false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string_view p = parts[i];
    const bool kernel_stage =
        stage.kind == PipelineStage::Kind::fk || stage.kind == PipelineStage::Kind::bev;
    if (p.starts_with("seed=") && stage.kind == PipelineStage::Kind::shuffle) {
      if (saw_seed) throw PipelineError("invalid pipeline: repeated seed in '" + stage.text + "'");
      saw_seed = true;
      stage.seed = parse_stage_uint(p.substr(5), text);
    } else if (p.starts_with("k=") && kernel_stage) {
      if (saw_k) throw PipelineError("invalid pipeline: repeated k in '" + stage.text + "'");
      saw_k = true;
      const std::uint64_t k = parse_stage_uint(p.substr(2), text);
      if (k > 0xffffffffULL)
        throw PipelineError("invalid pipeline: k out of range in '" + stage.text + "'");
      stage.k = static_cast<std::uint32_t>(k);
    } else if (p.starts_with("store=") && kernel_stage) {
      if (saw_store)
        throw PipelineError("invalid pipeline: repeated store in '" + stage.text + "'");
      saw_store = true;
      try {
        stage.store = parse_store_backend(p.substr(6));
      } catch (const std::invalid_argument& e) {
        throw PipelineError(std::string("invalid pipeline: ") + e.what());
      }
    } else if (p.starts_with("strategy=") && kernel_stage) {
      if (saw_strategy)
        throw PipelineError("invalid pipeline: repeated strategy in '" + stage.text + "'");
      saw_strategy = true;
      const std::string_view v = p.substr(9);
      if (v == "full") {
        stage.strategy = SubsetStrategy::full();
      } else if (v.starts_with("restricted(") && v.ends_with(")")) {
        const std::uint64_t ds = parse_stage_uint(v.substr(11, v.size() - 12), text);
        if (ds > 0xffffffffULL)
          throw PipelineError("invalid pipeline: restricted bound out of range");
        stage.strategy = SubsetStrategy::restricted(static_cast<std::uint32_t>(ds));
      } else {
        throw PipelineError("invalid pipeline: unknown strategy '" + std::string(v) + "'");
      }
    } else if (p == "nosuperset" && kernel_stage) {
      if (saw_nosuperset)
        throw PipelineError("invalid pipeline: repeated nosuperset in '" + stage.text + "'");
      saw_nosuperset = true;
      stage.superset_removal = false;
    } else {
      throw PipelineError("invalid pipeline: unknown parameter '" + std::string(p) + "' in '" +
                          stage.text + "'");
    }
  }
  return stage;
}

}  // namespace

PipelineSpec parse_pipeline(std::string_view text) {
  if (text.empty()) throw PipelineError("invalid pipeline: empty spec");
  PipelineSpec spec;
  for (std::string_view part : split(text, ',')) {
    if (part.empty()) throw PipelineError("invalid pipeline: empty stage");
    spec.stages.push_back(parse_stage(part));
  }
  return spec;
}

PipelineResult run_pipeline(const Hypergraph& h, const PipelineSpec& spec, std::uint64_t seed) {
  PipelineResult result;
  result.graph = h;
  for (std::size_t idx = 0; idx < spec.stages.size(); ++idx) {
    const PipelineStage& stage = spec.stages[idx];
    try {
      switch (stage.kind) {
        case PipelineStage::Kind::shuffle: {
          const auto t0 = std::chrono::steady_clock::now();
          const std::uint64_t used = stage.seed.value_or(seed + idx);
          result.graph = shuffle_edges(result.graph, used);
          ReductionStats st;
          st.stage = "shuffle";
          st.parameters = "seed=" + std::to_string(used);
          st.edges_in = st.edges_out = result.graph.m();
          st.vertices_out = result.graph.vertex_support();
          st.wall_time_ns = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count());
          result.stages.push_back(std::move(st));
          break;
        }
        case PipelineStage::Kind::fk:
        case PipelineStage::Kind::bev: {
          const auto t0 = std::chrono::steady_clock::now();
          FkConfig cfg;
          cfg.k = stage.k ? *stage.k : greedy_upper_bound(result.graph).k;
          cfg.store = stage.store;
          cfg.strategy = stage.strategy;
          cfg.superset_removal = stage.superset_removal;
          KernelResult kr = stage.kind == PipelineStage::Kind::fk
                                ? kernelize_fk(result.graph, cfg)
                                : kernelize_bev(result.graph, cfg);
          result.graph = std::move(kr.graph);
          // Absorb the greedy bound into the stage's wall time.
          kr.stats.wall_time_ns = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count());
          result.stages.push_back(std::move(kr.stats));
          break;
        }
        case PipelineStage::Kind::weihe: {
          WeiheResult wr = reduce_weihe(result.graph);
          result.graph = std::move(wr.graph);
          result.stages.push_back(std::move(wr.stats));
          break;
        }
      }
    } catch (const std::exception& e) {
      throw PipelineError("stage " + std::to_string(idx + 1) + " (" + stage.text +
                          "): " + e.what());
    }
  }
  return result;
}

std::string stats_to_json(const std::vector<ReductionStats>& stages) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReductionStats& st : stages) {
    nlohmann::json row{{"stage", st.stage},
                       {"parameters", st.parameters},
                       {"edges_in", st.edges_in},
                       {"edges_out", st.edges_out},
                       {"vertices_out", st.vertices_out},
                       {"wall_time_ns", st.wall_time_ns},
                       {"peak_store_cells", st.peak_store_cells},
                       {"deleted_vertices", st.deleted_vertices}};
    if (st.k_used)
      row["k_used"] = *st.k_used;
    else
      row["k_used"] = nullptr;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

}  // namespace hsk
