#include "hsk/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

namespace hsk {

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& list : adj) twice += list.size();
  return twice / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

std::uint64_t parse_uint(std::string_view token, const char* what, std::uint64_t max_value) {
  std::uint64_t value = 0;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(std::string("malformed ") + what + " '" + std::string(token) + "'");
  if (value > max_value)
    throw ParseError(std::string(what) + " '" + std::string(token) + "' out of range");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::uint64_t promised = 0;
  std::uint64_t seen = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = end == std::string_view::npos ? text.substr(start)
                                                          : text.substr(start, end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      const std::size_t tok = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > tok) tokens.push_back(line.substr(tok, pos - tok));
    }

    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "graph")
        throw ParseError("malformed header, expected 'p graph <n> <m>'");
      g.n = static_cast<std::uint32_t>(parse_uint(tokens[2], "vertex count", 0xfffffffeULL));
      promised = parse_uint(tokens[3], "edge count", 0xffffffffULL);
      g.adj.assign(static_cast<std::size_t>(g.n) + 1, {});
      have_header = true;
      continue;
    }
    if (seen == promised)
      throw ParseError("edge count mismatch: trailing content on line " + std::to_string(line_no));
    if (tokens.size() != 2)
      throw ParseError("expected 'u v' on line " + std::to_string(line_no));
    const auto u = static_cast<VertexId>(parse_uint(tokens[0], "vertex id", g.n));
    const auto v = static_cast<VertexId>(parse_uint(tokens[1], "vertex id", g.n));
    if (u < 1 || v < 1) throw ParseError("vertex id 0 on line " + std::to_string(line_no));
    if (u == v) throw ParseError("self-loop on line " + std::to_string(line_no));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    ++seen;
  }
  if (!have_header) throw ParseError("missing 'p graph' header");
  if (seen < promised)
    throw ParseError("edge count mismatch: header promises " + std::to_string(promised) +
                     " edges, found " + std::to_string(seen));
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

Hypergraph gen_random(std::uint32_t n, std::uint64_t m, std::uint32_t d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("edge size must be at least 1");
  if (d > n)
    throw std::invalid_argument("edge size " + std::to_string(d) + " exceeds vertex count " +
                                std::to_string(n));
  Hypergraph h;
  h.n = n;
  h.d = d;
  h.edges.reserve(m);
  std::mt19937_64 rng(seed);
  Edge edge;
  for (std::uint64_t i = 0; i < m; ++i) {
    edge.clear();
    // Floyd's sampling: after the round for j, edge holds a uniform sample
    // of j - (n - d) values from {1..j}.
    for (std::uint32_t j = n - d + 1; j <= n; ++j) {
      const auto t = static_cast<VertexId>(1 + uniform_below(rng, j));
      if (std::find(edge.begin(), edge.end(), t) != edge.end())
        edge.push_back(j);
      else
        edge.push_back(t);
    }
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(edge);
  }
  return h;
}

Hypergraph cvd_to_hs3(const Graph& g) {
  Hypergraph h;
  h.n = g.n;
  h.d = 3;
  for (VertexId b = 1; b <= g.n; ++b) {
    const auto& nb = g.adj[b];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const VertexId a = nb[i];
        const VertexId c = nb[j];
        if (g.has_edge(a, c)) continue;
        Edge e{a, b, c};
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
      }
  }
  return h;
}

}  // namespace hsk
