#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "mixnull/errors.hpp"
#include "mixnull/invariants.hpp"

namespace mixnull {
namespace {

constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

class BlockFinder {
 public:
  explicit BlockFinder(const UnderlyingGraph& g)
      : g_(g), disc_(g.order(), kUnseen), low_(g.order(), 0) {}

  std::vector<Block> run() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (disc_[v] == kUnseen) visit(v, kUnseen);
    }
    std::sort(out_.begin(), out_.end(),
              [](const Block& a, const Block& b) { return a.edges < b.edges; });
    return std::move(out_);
  }

 private:
  void visit(VertexId v, VertexId parent) {
    disc_[v] = low_[v] = timer_++;
    for (VertexId w : g_.neighbors(v)) {
      if (w == parent) continue;
      if (disc_[w] == kUnseen) {
        stack_.push_back({v, w});
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) emit(v, w);
      } else if (disc_[w] < disc_[v]) {
        stack_.push_back({v, w});
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void emit(VertexId v, VertexId w) {
    Block b;
    for (;;) {
      const Edge e = stack_.back();
      stack_.pop_back();
      b.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
      b.vertices.push_back(e.u);
      b.vertices.push_back(e.v);
      if (e.u == v && e.v == w) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out_.push_back(std::move(b));
  }

  const UnderlyingGraph& g_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::size_t timer_ = 0;
  std::vector<Edge> stack_;
  std::vector<Block> out_;
};

/// Walks a cycle block starting at its smallest vertex toward the smaller of
/// that vertex's two block neighbors.
std::vector<VertexId> cycle_order(const Block& block) {
  auto block_neighbors = [&](VertexId x) {
    std::vector<VertexId> nb;
    for (const Edge& e : block.edges) {
      if (e.u == x) nb.push_back(e.v);
      if (e.v == x) nb.push_back(e.u);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
  };
  std::vector<VertexId> order;
  const VertexId start = block.vertices.front();
  VertexId prev = start;
  VertexId cur = block_neighbors(start).front();
  order.push_back(start);
  while (cur != start) {
    order.push_back(cur);
    const auto nb = block_neighbors(cur);
    const VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

std::size_t component_count(const UnderlyingGraph& g) { return connected_components(g).size(); }

std::size_t cyclomatic_number(const UnderlyingGraph& g) {
  return g.size() + component_count(g) - g.order();
}

std::optional<std::size_t> girth(const UnderlyingGraph& g) {
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(g.order());
  std::vector<VertexId> parent(g.order());
  for (VertexId root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<Block> blocks(const UnderlyingGraph& g) { return BlockFinder(g).run(); }

std::vector<CycleMembership> cycle_membership(const UnderlyingGraph& g) {
  std::vector<std::size_t> count(g.order(), 0);
  std::vector<CycleMembership> out(g.order(), CycleMembership::None);
  for (const Block& b : blocks(g)) {
    if (b.is_bridge()) continue;
    for (VertexId v : b.vertices) {
      ++count[v];
      // A 2-connected block that is not a single cycle carries at least two
      // distinct cycles through each of its vertices.
      if (!b.is_cycle() || count[v] >= 2) out[v] = CycleMembership::Several;
      else out[v] = CycleMembership::One;
    }
  }
  return out;
}

std::vector<std::size_t> cycle_edge_degree(const UnderlyingGraph& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (const Block& b : blocks(g)) {
    if (b.is_bridge()) continue;
    for (const Edge& e : b.edges) {
      ++out[e.u];
      ++out[e.v];
    }
  }
  return out;
}

CycleDecomposition cycles_vertex_disjoint(const UnderlyingGraph& g) {
  CycleDecomposition out;
  std::vector<bool> used(g.order(), false);
  for (const Block& b : blocks(g)) {
    if (b.is_bridge()) continue;
    if (!b.is_cycle()) {
      out.vertex_disjoint = false;
      break;
    }
    for (VertexId v : b.vertices) {
      if (used[v]) out.vertex_disjoint = false;
      used[v] = true;
    }
    if (!out.vertex_disjoint) break;
    out.cycles.push_back(cycle_order(b));
  }
  if (!out.vertex_disjoint) {
    out.cycles.clear();
  } else {
    std::sort(out.cycles.begin(), out.cycles.end());
  }
  return out;
}

CycleWithSignature signature(const MixedGraph& g, std::span<const VertexId> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) throw InputError("a cycle needs at least 3 vertices");
  std::set<VertexId> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != len) throw InputError("cycle repeats a vertex");
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % len];
    if (a >= g.order() || b >= g.order()) throw InputError("cycle vertex out of range");
    if (!g.adjacent(a, b)) {
      throw InputError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                       " are consecutive on the cycle but not adjacent");
    }
  }

  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  const std::size_t start = static_cast<std::size_t>(min_it - cycle.begin());
  const VertexId next = cycle[(start + 1) % len];
  const VertexId prev = cycle[(start + len - 1) % len];
  const bool ahead = next < prev;

  CycleWithSignature out;
  out.vertices.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t idx = ahead ? (start + k) % len : (start + len - k) % len;
    out.vertices.push_back(cycle[idx]);
  }
  for (std::size_t k = 0; k < len; ++k) {
    const EdgeState s = *g.direction(out.vertices[k], out.vertices[(k + 1) % len]);
    if (s == EdgeState::Forward) ++out.forward;
    if (s == EdgeState::Backward) ++out.backward;
  }
  out.sigma = out.forward > out.backward ? out.forward - out.backward : out.backward - out.forward;
  return out;
}

ContractionResult contract_cycles(const UnderlyingGraph& g) {
  const CycleDecomposition dec = cycles_vertex_disjoint(g);
  if (!dec.vertex_disjoint) {
    throw InputError("T_G is undefined: the graph has two cycles sharing a vertex");
  }
  std::vector<std::size_t> cycle_of(g.order(), kUnseen);
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    for (VertexId v : dec.cycles[i]) cycle_of[v] = i;
  }

  ContractionResult out;
  out.vertex_map.assign(g.order(), 0);
  std::vector<std::size_t> cycle_id(dec.cycles.size(), kUnseen);
  VertexId next = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (cycle_of[v] == kUnseen) {
      out.vertex_map[v] = next++;
      continue;
    }
    out.o_g.push_back(v);
    std::size_t& id = cycle_id[cycle_of[v]];
    if (id == kUnseen) {
      id = next++;
      out.w_g.push_back(id);
    }
    out.vertex_map[v] = id;
  }

  std::set<Edge> contracted;
  for (const Edge& e : g.edges()) {
    if (cycle_of[e.u] != kUnseen && cycle_of[e.u] == cycle_of[e.v]) continue;
    const VertexId a = out.vertex_map[e.u];
    const VertexId b = out.vertex_map[e.v];
    if (!contracted.insert({std::min(a, b), std::max(a, b)}).second) {
      throw ConsistencyError("cycle contraction produced a repeated edge {" + std::to_string(a) +
                             ", " + std::to_string(b) + "}");
    }
  }
  out.t_g = UnderlyingGraph(next, std::vector<Edge>(contracted.begin(), contracted.end()));
  if (cyclomatic_number(out.t_g) != 0) {
    throw ConsistencyError("cycle contraction did not produce a forest");
  }
  out.bracket_t_g = delete_vertices(out.t_g, out.w_g).graph;
  return out;
}

ContractionResult contract_cycles(const MixedGraph& g) { return contract_cycles(underlying(g)); }

StructureReport structure_report(const MixedGraph& g) {
  const UnderlyingGraph u = underlying(g);
  StructureReport r;
  r.matching_number = matching_number(u);
  r.components = component_count(u);
  r.cyclomatic = u.size() + r.components - u.order();
  r.girth = girth(u);
  const CycleDecomposition dec = cycles_vertex_disjoint(u);
  r.cycles_vertex_disjoint = dec.vertex_disjoint;
  for (const auto& cycle : dec.cycles) r.cycles.push_back(signature(g, cycle));
  return r;
}

}  // namespace mixnull
