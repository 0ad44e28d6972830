#include <cstdint>
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsk/bounds.hpp"
#include "hsk/generators.hpp"
#include "hsk/hypergraph.hpp"
#include "hsk/kernel.hpp"
#include "hsk/pipeline.hpp"
#include "hsk/stats.hpp"
#include "hsk/weihe.hpp"

namespace py = pybind11;

namespace {

hsk::FkConfig make_config(std::optional<std::uint32_t> k, const hsk::Hypergraph& h,
                          const std::string& store, bool superset_removal) {
  hsk::FkConfig cfg;
  cfg.k = k ? *k : hsk::greedy_upper_bound(h).k;
  cfg.store = hsk::parse_store_backend(store);
  cfg.superset_removal = superset_removal;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(hskernel, m) {
  m.doc() = "d-hitting-set kernelization";

  py::register_exception<hsk::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<hsk::PipelineError>(m, "PipelineError", PyExc_ValueError);

  py::class_<hsk::Hypergraph>(m, "Hypergraph")
      .def(py::init<>())
      .def_readwrite("n", &hsk::Hypergraph::n)
      .def_readwrite("d", &hsk::Hypergraph::d)
      .def_readwrite("edges", &hsk::Hypergraph::edges)
      .def_property_readonly("m", &hsk::Hypergraph::m)
      .def("validate", &hsk::Hypergraph::validate)
      .def("__eq__", [](const hsk::Hypergraph& a, const hsk::Hypergraph& b) { return a == b; })
      .def("__repr__", [](const hsk::Hypergraph& h) {
        return "Hypergraph(n=" + std::to_string(h.n) + ", d=" + std::to_string(h.d) +
               ", m=" + std::to_string(h.m()) + ")";
      });

  py::class_<hsk::ReductionStats>(m, "ReductionStats")
      .def_readonly("stage", &hsk::ReductionStats::stage)
      .def_readonly("parameters", &hsk::ReductionStats::parameters)
      .def_readonly("edges_in", &hsk::ReductionStats::edges_in)
      .def_readonly("edges_out", &hsk::ReductionStats::edges_out)
      .def_readonly("vertices_out", &hsk::ReductionStats::vertices_out)
      .def_readonly("k_used", &hsk::ReductionStats::k_used)
      .def_readonly("wall_time_ns", &hsk::ReductionStats::wall_time_ns)
      .def_readonly("peak_store_cells", &hsk::ReductionStats::peak_store_cells)
      .def_readonly("deleted_vertices", &hsk::ReductionStats::deleted_vertices)
      .def("__repr__", [](const hsk::ReductionStats& s) {
        return "ReductionStats(stage='" + s.stage + "', edges_in=" + std::to_string(s.edges_in) +
               ", edges_out=" + std::to_string(s.edges_out) + ")";
      });

  m.def("parse_hgr", &hsk::parse_hgr, py::arg("text"));
  m.def("write_hgr", &hsk::write_hgr, py::arg("graph"));
  m.def("shuffle_edges", &hsk::shuffle_edges, py::arg("graph"), py::arg("seed"));

  m.def(
      "gen_random",
      [](std::uint32_t n, std::uint64_t m_edges, std::uint32_t d, std::uint64_t seed) {
        return hsk::gen_random(n, m_edges, d, seed);
      },
      py::arg("n"), py::arg("m"), py::arg("d"), py::arg("seed") = 0);

  m.def(
      "cvd_to_hs3",
      [](const std::string& graph_text) { return hsk::cvd_to_hs3(hsk::parse_graph(graph_text)); },
      py::arg("graph_text"), "build the 3-hitting-set instance of a graph in edge-list form");

  m.def(
      "kernelize_fk",
      [](const hsk::Hypergraph& h, std::optional<std::uint32_t> k, const std::string& store,
         bool superset_removal) {
        hsk::KernelResult r = hsk::kernelize_fk(h, make_config(k, h, store, superset_removal));
        return py::make_tuple(r.graph, r.stats);
      },
      py::arg("graph"), py::arg("k") = std::nullopt, py::arg("store") = "array",
      py::arg("superset_removal") = true);

  m.def(
      "kernelize_bev",
      [](const hsk::Hypergraph& h, std::optional<std::uint32_t> k, const std::string& store) {
        hsk::KernelResult r = hsk::kernelize_bev(h, make_config(k, h, store, true));
        return py::make_tuple(r.graph, r.stats);
      },
      py::arg("graph"), py::arg("k") = std::nullopt, py::arg("store") = "array");

  m.def(
      "reduce_weihe",
      [](const hsk::Hypergraph& h) {
        hsk::WeiheResult r = hsk::reduce_weihe(h);
        return py::make_tuple(r.graph, r.stats);
      },
      py::arg("graph"));

  m.def(
      "greedy_upper_bound",
      [](const hsk::Hypergraph& h) {
        hsk::GreedyBound b = hsk::greedy_upper_bound(h);
        return py::make_tuple(b.k, b.vertices);
      },
      py::arg("graph"));

  m.def(
      "exact_min_hitting_set",
      [](const hsk::Hypergraph& h, std::optional<std::uint32_t> budget) {
        return hsk::exact_min_hitting_set(h, budget ? *budget : h.n);
      },
      py::arg("graph"), py::arg("budget") = std::nullopt);

  m.def(
      "verify_hitting_set",
      [](const hsk::Hypergraph& h, const std::vector<hsk::VertexId>& vertices) {
        return hsk::verify_hitting_set(h, vertices);
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "run_pipeline",
      [](const hsk::Hypergraph& h, const std::string& spec, std::uint64_t seed) {
        hsk::PipelineResult r = hsk::run_pipeline(h, hsk::parse_pipeline(spec), seed);
        return py::make_tuple(r.graph, r.stages);
      },
      py::arg("graph"), py::arg("pipeline"), py::arg("seed") = 0);

  m.def("stats_to_json", &hsk::stats_to_json, py::arg("stages"));
}
