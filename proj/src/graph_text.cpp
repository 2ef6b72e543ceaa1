#include "mixnull/graph_text.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mixnull/errors.hpp"

namespace mixnull {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

EdgeState parse_state(std::string_view tok, std::size_t line) {
  if (tok == "u") return EdgeState::Undirected;
  if (tok == "f") return EdgeState::Forward;
  if (tok == "b") return EdgeState::Backward;
  fail(line, "edge state must be one of u, f, b; got '" + std::string(tok) + "'");
}

}  // namespace

char state_code(EdgeState s) {
  switch (s) {
    case EdgeState::Forward:
      return 'f';
    case EdgeState::Backward:
      return 'b';
    case EdgeState::Undirected:
      break;
  }
  return 'u';
}

MixedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<MixedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (tok[0] == "n") {
      if (order) fail(line_no, "duplicate 'n' line");
      if (tok.size() != 2) fail(line_no, "expected 'n <order>'");
      order = parse_index(tok[1], line_no);
    } else if (tok[0] == "e") {
      if (!order) fail(line_no, "'e' line before 'n <order>'");
      if (tok.size() != 4) fail(line_no, "expected 'e <u> <v> <state>'");
      const VertexId u = parse_index(tok[1], line_no);
      const VertexId v = parse_index(tok[2], line_no);
      const EdgeState s = parse_state(tok[3], line_no);
      if (u >= *order || v >= *order) {
        fail(line_no, "vertex index >= declared order " + std::to_string(*order));
      }
      if (u == v) fail(line_no, "loop at vertex " + std::to_string(u));
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
        fail(line_no, "multiedge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
      }
      edges.push_back({u, v, s});
    } else {
      fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!order) throw InputError("line " + std::to_string(line_no) + ": missing 'n <order>' line");
  return MixedGraph(*order, std::move(edges));
}

std::string serialize_graph(const MixedGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const MixedEdge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + state_code(e.state) +
           "\n";
  }
  return out;
}

}  // namespace mixnull
