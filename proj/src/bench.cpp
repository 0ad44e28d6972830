#include "hsk/bench.hpp"

#include <atomic>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hsk/generators.hpp"
#include "hsk/pipeline.hpp"

namespace hsk {

namespace {

std::uint64_t parse_value(std::string_view token, std::string_view key) {
  std::uint64_t value = 0;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("sweep: malformed value '" + std::string(token) + "' for " +
                     std::string(key));
  return value;
}

std::vector<std::uint64_t> parse_list(std::string_view text, std::string_view key) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
      ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ',') ++pos;
    if (pos > start) values.push_back(parse_value(text.substr(start, pos - start), key));
  }
  if (values.empty()) throw ParseError("sweep: empty value list for " + std::string(key));
  return values;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n") == std::string_view::npos) return std::string(value);
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

SweepConfig parse_sweep(std::string_view text) {
  SweepConfig config;
  std::size_t start = 0;
  std::size_t line_no = 0;
  bool saw_n = false;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = end == std::string_view::npos ? text.substr(start)
                                                          : text.substr(start, end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == 'c' && (line.size() == 1 || line[1] == ' ')) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("sweep: expected 'key = value' on line " + std::to_string(line_no));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "n") {
      const std::uint64_t n = parse_value(value, key);
      if (n > 0xfffffffeULL) throw ParseError("sweep: n out of range");
      config.n = static_cast<std::uint32_t>(n);
      saw_n = true;
    } else if (key == "d") {
      for (std::uint64_t v : parse_list(value, key)) {
        if (v == 0 || v > 0xffffffffULL) throw ParseError("sweep: d out of range");
        config.d_values.push_back(static_cast<std::uint32_t>(v));
      }
    } else if (key == "m") {
      config.m_values = parse_list(value, key);
    } else if (key == "seeds") {
      config.seeds = parse_list(value, key);
    } else if (key == "pipeline") {
      if (value.empty()) throw ParseError("sweep: empty pipeline on line " + std::to_string(line_no));
      config.pipelines.emplace_back(value);
    } else {
      throw ParseError("sweep: unknown key '" + std::string(key) + "' on line " +
                       std::to_string(line_no));
    }
  }
  if (!saw_n) throw ParseError("sweep: missing n");
  if (config.d_values.empty()) throw ParseError("sweep: missing d");
  if (config.m_values.empty()) throw ParseError("sweep: missing m");
  if (config.seeds.empty()) throw ParseError("sweep: missing seeds");
  if (config.pipelines.empty()) throw ParseError("sweep: missing pipeline");
  return config;
}

std::string bench_sweep(const SweepConfig& config) {
  struct Task {
    std::uint32_t d;
    std::uint64_t m;
    std::uint64_t seed;
    std::size_t pipeline;
  };
  std::vector<PipelineSpec> specs;
  specs.reserve(config.pipelines.size());
  for (const std::string& p : config.pipelines) specs.push_back(parse_pipeline(p));

  std::vector<Task> tasks;
  for (std::uint32_t d : config.d_values)
    for (std::uint64_t m : config.m_values)
      for (std::uint64_t seed : config.seeds)
        for (std::size_t p = 0; p < specs.size(); ++p) tasks.push_back({d, m, seed, p});

  // One result slot per task keeps the output order canonical no matter
  // which worker finishes first.
  std::vector<std::vector<ReductionStats>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        const Task& task = tasks[t];
        const Hypergraph h = gen_random(config.n, task.m, task.d, task.seed);
        results[t] = run_pipeline(h, specs[task.pipeline], task.seed).stages;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(tasks.size());
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::string csv =
      "d,m,seed,pipeline,stage,edges_in,edges_out,vertices_out,k_used,wall_time_ns,"
      "peak_store_cells,deleted_vertices\n";
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const Task& task = tasks[t];
    for (std::size_t s = 0; s < results[t].size(); ++s) {
      const ReductionStats& st = results[t][s];
      csv += std::to_string(task.d) + ',' + std::to_string(task.m) + ',' +
             std::to_string(task.seed) + ',' + csv_field(config.pipelines[task.pipeline]) + ',' +
             std::to_string(s + 1) + ':' + st.stage + ',' + std::to_string(st.edges_in) + ',' +
             std::to_string(st.edges_out) + ',' + std::to_string(st.vertices_out) + ',' +
             (st.k_used ? std::to_string(*st.k_used) : std::string()) + ',' +
             std::to_string(st.wall_time_ns) + ',' + std::to_string(st.peak_store_cells) + ',' +
             std::to_string(st.deleted_vertices) + '\n';
    }
  }
  return csv;
}

}  // namespace hsk
