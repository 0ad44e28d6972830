#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hsk/bench.hpp"
#include "hsk/bounds.hpp"
#include "hsk/generators.hpp"
#include "hsk/hypergraph.hpp"
#include "hsk/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hsk::ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw hsk::ParseError("cannot read '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hsk::ParseError("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw hsk::ParseError("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-hitting-set kernelization toolkit"};
  app.require_subcommand(1);

  // gen random / gen cvd
  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  std::uint32_t gen_n = 0, gen_d = 0;
  std::uint64_t gen_m = 0, gen_seed = 0;
  std::string gen_out;
  CLI::App* gen_random_cmd = gen->add_subcommand("random", "uniform random d-subset edges");
  gen_random_cmd->add_option("--n", gen_n, "number of vertices")->required();
  gen_random_cmd->add_option("--m", gen_m, "number of edges")->required();
  gen_random_cmd->add_option("--d", gen_d, "edge size")->required();
  gen_random_cmd->add_option("--seed", gen_seed, "random seed")->default_val(0);
  gen_random_cmd->add_option("-o,--output", gen_out, "output .hgr file")->required();

  std::string cvd_in, cvd_out;
  CLI::App* gen_cvd_cmd =
      gen->add_subcommand("cvd", "cluster vertex deletion instance as 3-hitting-set");
  gen_cvd_cmd->add_option("-i,--input", cvd_in, "input graph file")->required();
  gen_cvd_cmd->add_option("-o,--output", cvd_out, "output .hgr file")->required();

  // kernelize
  std::string ker_pipeline, ker_in, ker_out, ker_stats;
  std::uint64_t ker_seed = 0;
  CLI::App* kernelize_cmd = app.add_subcommand("kernelize", "run a reduction pipeline");
  kernelize_cmd->add_option("-p,--pipeline", ker_pipeline, "pipeline spec, e.g. shuffle:seed=7,fk:store=array,weihe")
      ->required();
  kernelize_cmd->add_option("-i,--input", ker_in, "input .hgr file")->required();
  kernelize_cmd->add_option("-o,--output", ker_out, "output .hgr file")->required();
  kernelize_cmd->add_option("--stats", ker_stats, "write per-stage stats JSON to this file");
  kernelize_cmd->add_option("--seed", ker_seed, "pipeline seed for shuffle stages without one")
      ->default_val(0);

  // solve
  std::string solve_file;
  std::uint32_t solve_budget = 0;
  bool solve_exact = false;
  bool have_budget = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "exact minimum hitting set");
  solve_cmd->add_flag("--exact", solve_exact, "branch and bound search")->required();
  CLI::Option* budget_opt =
      solve_cmd->add_option("--budget", solve_budget, "give up beyond this size (default n)");
  solve_cmd->add_option("file", solve_file, "input .hgr file")->required();

  // bound
  std::string bound_file;
  CLI::App* bound_cmd = app.add_subcommand("bound", "greedy upper bound");
  bound_cmd->add_option("file", bound_file, "input .hgr file")->required();

  // bench
  std::string bench_spec, bench_out;
  unsigned bench_jobs = 1;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a sweep and write CSV");
  bench_cmd->add_option("--spec", bench_spec, "sweep description file")->required();
  bench_cmd->add_option("-o,--output", bench_out, "output CSV file")->required();
  bench_cmd->add_option("--jobs", bench_jobs, "worker threads over sweep cells")->default_val(1);

  try {
    app.parse(argc, argv);
    have_budget = budget_opt->count() > 0;

    if (gen_random_cmd->parsed()) {
      write_file(gen_out, hsk::write_hgr(hsk::gen_random(gen_n, gen_m, gen_d, gen_seed)));
    } else if (gen_cvd_cmd->parsed()) {
      const hsk::Graph g = hsk::parse_graph(read_file(cvd_in));
      write_file(cvd_out, hsk::write_hgr(hsk::cvd_to_hs3(g)));
    } else if (kernelize_cmd->parsed()) {
      const hsk::PipelineSpec spec = hsk::parse_pipeline(ker_pipeline);
      hsk::Hypergraph h = hsk::parse_hgr(read_file(ker_in));
      hsk::PipelineResult result = hsk::run_pipeline(h, spec, ker_seed);
      write_file(ker_out, hsk::write_hgr(result.graph));
      if (!ker_stats.empty()) write_file(ker_stats, hsk::stats_to_json(result.stages));
    } else if (solve_cmd->parsed()) {
      const hsk::Hypergraph h = hsk::parse_hgr(read_file(solve_file));
      const std::uint32_t budget = have_budget ? solve_budget : h.n;
      const auto size = hsk::exact_min_hitting_set(h, budget);
      if (size)
        std::cout << *size << '\n';
      else
        std::cout << "exceeds budget\n";
    } else if (bound_cmd->parsed()) {
      const hsk::Hypergraph h = hsk::parse_hgr(read_file(bound_file));
      const hsk::GreedyBound bound = hsk::greedy_upper_bound(h);
      std::cout << bound.k << '\n';
      for (std::size_t i = 0; i < bound.vertices.size(); ++i)
        std::cout << bound.vertices[i] << (i + 1 < bound.vertices.size() ? ' ' : '\n');
      if (bound.vertices.empty()) std::cout << '\n';
    } else if (bench_cmd->parsed()) {
      hsk::SweepConfig config = hsk::parse_sweep(read_file(bench_spec));
      config.jobs = bench_jobs;
      write_file(bench_out, hsk::bench_sweep(config));
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const hsk::PipelineError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const hsk::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
