#include "mixnull/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>

#include "mixnull/errors.hpp"

namespace mixnull {
namespace {

std::size_t pair_bits(std::size_t n) { return n * (n - 1) / 2; }

void require_canonical_order(const UnderlyingGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw InputError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                     " vertices, got " + std::to_string(g.order()));
  }
}

std::vector<std::size_t> refine_colours(const UnderlyingGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (VertexId v = 0; v < n; ++v) colour[v] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (VertexId v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (VertexId w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (VertexId v = 0; v < n; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const UnderlyingGraph& g)
      : n_(g.order()), bits_(pair_bits(g.order())), adj_(g.order(), 0), used_(g.order(), false) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
    colour_ = refine_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    perm_.resize(n_);
  }

  std::pair<std::uint64_t, std::vector<VertexId>> run() {
    search(0, 0);
    return {best_, best_perm_};
  }

 private:
  void search(std::size_t pos, std::uint64_t partial) {
    if (pos == n_) {
      if (!have_best_ || partial < best_) {
        have_best_ = true;
        best_ = partial;
        best_perm_ = perm_;
      }
      return;
    }
    const std::size_t known = pos * (pos + 1) / 2;
    for (VertexId v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[pos]) continue;
      std::uint64_t column = 0;
      for (std::size_t i = 0; i < pos; ++i) column = (column << 1) | ((adj_[perm_[i]] >> v) & 1u);
      const std::uint64_t next = (partial << pos) | column;
      if (have_best_ && next > (best_ >> (bits_ - known))) continue;
      used_[v] = true;
      perm_[pos] = v;
      search(pos + 1, next);
      used_[v] = false;
    }
  }

  std::size_t n_;
  std::size_t bits_;
  std::vector<std::uint32_t> adj_;
  std::vector<bool> used_;
  std::vector<std::size_t> colour_;
  std::vector<std::size_t> slot_colour_;
  std::vector<VertexId> perm_;
  bool have_best_ = false;
  std::uint64_t best_ = 0;
  std::vector<VertexId> best_perm_;
};

UnderlyingGraph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  const std::size_t bits = pair_bits(n);
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      if ((code >> (bits - 1 - k)) & 1u) edges.push_back({i, j});
    }
  }
  return UnderlyingGraph(n, std::move(edges));
}

char g6_char(std::uint64_t six) { return static_cast<char>(63 + six); }

}  // namespace

std::uint64_t adjacency_code(const UnderlyingGraph& g) {
  require_canonical_order(g);
  const std::size_t bits = pair_bits(g.order());
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) {
    const std::size_t k = e.v * (e.v - 1) / 2 + e.u;
    code |= std::uint64_t{1} << (bits - 1 - k);
  }
  return code;
}

std::uint64_t canonical_code(const UnderlyingGraph& g) {
  require_canonical_order(g);
  if (g.order() < 2) return 0;
  return CanonicalSearch(g).run().first;
}

UnderlyingGraph canonical_form(const UnderlyingGraph& g) {
  return graph_from_code(g.order(), canonical_code(g));
}

bool isomorphic(const UnderlyingGraph& a, const UnderlyingGraph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::vector<UnderlyingGraph> enumerate_underlying(const EnumerationScope& scope) {
  if (scope.n_max > kMaxEnumerationOrder) {
    throw InputError("scope too large: n_max " + std::to_string(scope.n_max) + " exceeds " +
                     std::to_string(kMaxEnumerationOrder));
  }
  if (scope.n_min < 1 || scope.n_min > scope.n_max) {
    throw InputError("scope needs 1 <= n_min <= n_max");
  }

  // Every graph on n vertices arises from one on n - 1 vertices by adding a
  // vertex; connected ones arise from connected ones by deleting a non-cut
  // vertex, so the new vertex must have a neighbor.
  const std::uint64_t first_mask = scope.connected_only ? 1 : 0;
  std::map<std::pair<std::size_t, std::uint64_t>, UnderlyingGraph> level;
  level.emplace(std::pair{std::size_t{0}, std::uint64_t{0}}, UnderlyingGraph(1));

  std::vector<UnderlyingGraph> out;
  for (std::size_t n = 1;; ++n) {
    if (n >= scope.n_min) {
      for (const auto& [key, g] : level) out.push_back(g);
    }
    if (n == scope.n_max) break;

    std::map<std::pair<std::size_t, std::uint64_t>, UnderlyingGraph> next;
    for (const auto& [key, g] : level) {
      const std::size_t budget = scope.e_max - g.size();
      for (std::uint64_t mask = first_mask; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > budget) continue;
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        for (VertexId v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) edges.push_back({v, n});
        }
        UnderlyingGraph candidate(n + 1, std::move(edges));
        const std::uint64_t code = canonical_code(candidate);
        const std::pair key2{candidate.size(), code};
        if (!next.contains(key2)) next.emplace(key2, graph_from_code(n + 1, code));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::uint64_t orientation_count(const UnderlyingGraph& g, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (count > cap / 3) {
      throw InputError("orientation cap exceeded: 3^" + std::to_string(g.size()) + " > " +
                       std::to_string(cap));
    }
    count *= 3;
  }
  if (count > cap) {
    throw InputError("orientation cap exceeded: 3^" + std::to_string(g.size()) + " > " +
                     std::to_string(cap));
  }
  return count;
}

std::vector<EdgeState> orientation_states(std::size_t edges, std::uint64_t index) {
  std::vector<EdgeState> states(edges);
  for (std::size_t j = 0; j < edges; ++j) {
    states[j] = static_cast<EdgeState>(index % 3);
    index /= 3;
  }
  return states;
}

std::uint64_t converse_index(std::size_t edges, std::uint64_t index) {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t j = 0; j < edges; ++j) {
    const std::uint64_t d = index % 3;
    index /= 3;
    out += place * (d == 0 ? 0 : 3 - d);
    place *= 3;
  }
  return out;
}

void for_each_orientation(const UnderlyingGraph& g, std::uint64_t cap, bool halve,
                          const std::function<void(const MixedGraph&, std::uint64_t)>& visit) {
  const std::uint64_t total = orientation_count(g, cap);
  std::vector<EdgeState> states(g.size(), EdgeState::Undirected);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (index > 0) {
      for (auto& s : states) {
        if (s != EdgeState::Backward) {
          s = static_cast<EdgeState>(static_cast<int>(s) + 1);
          break;
        }
        s = EdgeState::Undirected;
      }
    }
    if (halve && converse_index(g.size(), index) < index) continue;
    visit(MixedGraph::orient(g, states), index);
  }
}

UnderlyingGraph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InputError("graph6: empty line");
  if (line.front() == ':' || line.front() == '&') {
    throw InputError("graph6: sparse6/digraph6 encodings are not supported");
  }
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw InputError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > line.size()) throw InputError("graph6: truncated order field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    return v;
  };
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (line.size() - pos != need) {
    throw InputError("graph6: expected " + std::to_string(need) + " adjacency bytes, got " +
                     std::to_string(line.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<std::uint64_t>(line[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return UnderlyingGraph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_graph6(const UnderlyingGraph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += g6_char(n);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += g6_char((n >> shift) & 63u);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += g6_char((n >> shift) & 63u);
  }
  const std::size_t bits = n < 2 ? 0 : pair_bits(n);
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t k = e.v * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (std::uint8_t b : packed) out += g6_char(b);
  return out;
}

std::vector<UnderlyingGraph> read_graph6_stream(std::istream& in) {
  std::vector<UnderlyingGraph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mixnull
