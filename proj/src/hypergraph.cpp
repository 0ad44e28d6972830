#include "hsk/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace hsk {

void Hypergraph::validate() const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.empty()) throw std::invalid_argument("edge " + std::to_string(i + 1) + " is empty");
    if (e.size() > d)
      throw std::invalid_argument("edge " + std::to_string(i + 1) + " exceeds size " +
                                  std::to_string(d));
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 1 || e[j] > n)
        throw std::invalid_argument("edge " + std::to_string(i + 1) + " has vertex out of range");
      if (j > 0 && e[j - 1] >= e[j])
        throw std::invalid_argument("edge " + std::to_string(i + 1) + " is not sorted and unique");
    }
  }
}

std::uint64_t Hypergraph::vertex_support() const {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t count = 0;
  for (const Edge& e : edges)
    for (VertexId v : e)
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
  return count;
}

CanonicalCode canonical_code(std::vector<VertexId> subset, std::uint32_t width,
                             std::uint32_t pad) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.size() > width)
    throw std::invalid_argument("subset larger than code width");
  for (VertexId v : subset)
    if (v >= pad) throw std::invalid_argument("vertex id not below pad value");
  std::vector<std::uint32_t> slots(width, pad);
  std::copy(subset.begin(), subset.end(), slots.begin());
  return CanonicalCode(std::move(slots));
}

namespace {

// Splits text into lines without copying; the final line may lack a newline.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view line) {
  return !line.empty() && line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t' || line[1] == '\r');
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::uint64_t parse_uint(std::string_view token, const char* what, std::uint64_t max_value) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(std::string("malformed ") + what + " '" + std::string(token) + "'");
  if (value > max_value)
    throw ParseError(std::string(what) + " '" + std::string(token) + "' out of range");
  return value;
}

}  // namespace

Hypergraph parse_hgr(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t idx = 0;
  auto next_content_line = [&](bool required) -> std::string_view {
    while (idx < lines.size()) {
      std::string_view line = lines[idx];
      if (is_comment(line)) {
        ++idx;
        continue;
      }
      if (required) return line;
      if (is_blank(line)) {
        ++idx;
        continue;
      }
      return line;
    }
    return {};
  };

  // Header: first non-comment, non-blank line.
  std::string_view header = next_content_line(false);
  if (idx >= lines.size()) throw ParseError("missing 'p hs' header");
  auto head_tokens = tokenize(header);
  if (head_tokens.size() != 5 || head_tokens[0] != "p" || head_tokens[1] != "hs")
    throw ParseError("malformed header, expected 'p hs <n> <m> <d>'");
  Hypergraph h;
  h.n = static_cast<std::uint32_t>(parse_uint(head_tokens[2], "vertex count", 0xfffffffeULL));
  const std::uint64_t m = parse_uint(head_tokens[3], "edge count", 0xffffffffULL);
  h.d = static_cast<std::uint32_t>(parse_uint(head_tokens[4], "edge size bound", 0xffffffffULL));
  ++idx;

  h.edges.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    std::string_view line = next_content_line(true);
    if (idx >= lines.size())
      throw ParseError("edge count mismatch: header promises " + std::to_string(m) +
                       " edges, found " + std::to_string(e));
    ++idx;
    auto tokens = tokenize(line);
    if (tokens.empty()) throw ParseError("empty edge on line " + std::to_string(idx));
    Edge edge;
    edge.reserve(tokens.size());
    for (auto t : tokens)
      edge.push_back(static_cast<VertexId>(parse_uint(t, "vertex id", h.n == 0 ? 0 : h.n)));
    std::sort(edge.begin(), edge.end());
    for (std::size_t j = 0; j < edge.size(); ++j) {
      if (edge[j] < 1) throw ParseError("vertex id 0 on line " + std::to_string(idx));
      if (j > 0 && edge[j - 1] == edge[j])
        throw ParseError("duplicate vertex in edge on line " + std::to_string(idx));
    }
    if (edge.size() > h.d)
      throw ParseError("edge of size " + std::to_string(edge.size()) + " exceeds d=" +
                       std::to_string(h.d) + " on line " + std::to_string(idx));
    h.edges.push_back(std::move(edge));
  }

  // Only comments and blank lines may follow.
  while (idx < lines.size()) {
    if (!is_comment(lines[idx]) && !is_blank(lines[idx]))
      throw ParseError("edge count mismatch: trailing content after " + std::to_string(m) +
                       " edges");
    ++idx;
  }
  return h;
}

std::string write_hgr(const Hypergraph& h) {
  std::string out;
  out += "p hs " + std::to_string(h.n) + ' ' + std::to_string(h.edges.size()) + ' ' +
         std::to_string(h.d) + '\n';
  for (const Edge& e : h.edges) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Hypergraph shuffle_edges(const Hypergraph& h, std::uint64_t seed) {
  Hypergraph out = h;
  std::mt19937_64 rng(seed);
  for (std::size_t i = out.edges.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(out.edges[i - 1], out.edges[j]);
  }
  return out;
}

}  // namespace hsk
