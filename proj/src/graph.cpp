#include "mixnull/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "mixnull/errors.hpp"

namespace mixnull {
namespace {

void check_endpoints(std::size_t order, VertexId u, VertexId v) {
  if (u >= order || v >= order) {
    throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                     "} has an endpoint >= order " + std::to_string(order));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
}

template <class E>
void check_no_repeats(std::span<const E> sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].u == sorted[i].u && sorted[i - 1].v == sorted[i].v) {
      throw InputError("repeated edge {" + std::to_string(sorted[i].u) + ", " +
                       std::to_string(sorted[i].v) + "}");
    }
  }
}

std::vector<std::optional<VertexId>> survivors(std::size_t order,
                                               std::span<const VertexId> removed) {
  std::vector<bool> gone(order, false);
  for (VertexId x : removed) {
    if (x >= order) {
      throw InputError("vertex " + std::to_string(x) + " out of range for order " +
                       std::to_string(order));
    }
    gone[x] = true;
  }
  std::vector<std::optional<VertexId>> map(order);
  VertexId next = 0;
  for (VertexId v = 0; v < order; ++v) {
    if (!gone[v]) map[v] = next++;
  }
  return map;
}

std::vector<VertexId> complement(std::size_t order, std::span<const VertexId> kept) {
  std::vector<bool> keep(order, false);
  for (VertexId x : kept) {
    if (x >= order) {
      throw InputError("vertex " + std::to_string(x) + " out of range for order " +
                       std::to_string(order));
    }
    keep[x] = true;
  }
  std::vector<VertexId> removed;
  for (VertexId v = 0; v < order; ++v) {
    if (!keep[v]) removed.push_back(v);
  }
  return removed;
}

std::size_t surviving_order(const std::vector<std::optional<VertexId>>& map) {
  return static_cast<std::size_t>(std::count_if(map.begin(), map.end(),
                                                [](const auto& x) { return x.has_value(); }));
}

}  // namespace

UnderlyingGraph::UnderlyingGraph(std::size_t order)
    : order_(order), adjacency_(order, std::span<const Edge>{}) {}

UnderlyingGraph::UnderlyingGraph(std::size_t order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    check_endpoints(order_, e.u, e.v);
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  check_no_repeats(std::span<const Edge>(edges_));
  adjacency_ = detail::Adjacency(order_, std::span<const Edge>(edges_));
}

bool UnderlyingGraph::adjacent(VertexId a, VertexId b) const {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> UnderlyingGraph::edge_index(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

MixedGraph::MixedGraph(std::size_t order)
    : order_(order), adjacency_(order, std::span<const MixedEdge>{}) {}

MixedGraph::MixedGraph(std::size_t order, std::vector<MixedEdge> edges)
    : order_(order), edges_(std::move(edges)) {
  for (MixedEdge& e : edges_) {
    check_endpoints(order_, e.u, e.v);
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      e.state = reversed(e.state);
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const MixedEdge& a, const MixedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  check_no_repeats(std::span<const MixedEdge>(edges_));
  adjacency_ = detail::Adjacency(order_, std::span<const MixedEdge>(edges_));
}

MixedGraph::MixedGraph(Trusted, std::size_t order, std::vector<MixedEdge> edges)
    : order_(order),
      edges_(std::move(edges)),
      adjacency_(order_, std::span<const MixedEdge>(edges_)) {}

MixedGraph MixedGraph::orient(const UnderlyingGraph& g, std::span<const EdgeState> states) {
  if (states.size() != g.size()) {
    throw InputError("orientation has " + std::to_string(states.size()) + " states for " +
                     std::to_string(g.size()) + " edges");
  }
  std::vector<MixedEdge> edges;
  edges.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    edges.push_back({g.edges()[i].u, g.edges()[i].v, states[i]});
  }
  return MixedGraph(Trusted{}, g.order(), std::move(edges));
}

std::optional<EdgeState> MixedGraph::direction(VertexId from, VertexId to) const {
  const bool flip = from > to;
  const VertexId a = flip ? to : from;
  const VertexId b = flip ? from : to;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const MixedEdge& e, const std::pair<VertexId, VertexId>& k) {
                               return std::tie(e.u, e.v) < std::tie(k.first, k.second);
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return flip ? reversed(it->state) : it->state;
}

UnderlyingGraph underlying(const MixedGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const MixedEdge& e : g.edges()) edges.push_back({e.u, e.v});
  return UnderlyingGraph(g.order(), std::move(edges));
}

MixedGraph converse(const MixedGraph& g) {
  std::vector<MixedEdge> edges(g.edges().begin(), g.edges().end());
  for (MixedEdge& e : edges) e.state = reversed(e.state);
  return MixedGraph(g.order(), std::move(edges));
}

Subgraph<MixedGraph> delete_vertices(const MixedGraph& g, std::span<const VertexId> removed) {
  auto map = survivors(g.order(), removed);
  std::vector<MixedEdge> edges;
  for (const MixedEdge& e : g.edges()) {
    if (map[e.u] && map[e.v]) edges.push_back({*map[e.u], *map[e.v], e.state});
  }
  const std::size_t order = surviving_order(map);
  return {MixedGraph(order, std::move(edges)), std::move(map)};
}

Subgraph<UnderlyingGraph> delete_vertices(const UnderlyingGraph& g,
                                          std::span<const VertexId> removed) {
  auto map = survivors(g.order(), removed);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (map[e.u] && map[e.v]) edges.push_back({*map[e.u], *map[e.v]});
  }
  const std::size_t order = surviving_order(map);
  return {UnderlyingGraph(order, std::move(edges)), std::move(map)};
}

Subgraph<MixedGraph> induced_subgraph(const MixedGraph& g, std::span<const VertexId> kept) {
  return delete_vertices(g, complement(g.order(), kept));
}

Subgraph<UnderlyingGraph> induced_subgraph(const UnderlyingGraph& g,
                                           std::span<const VertexId> kept) {
  return delete_vertices(g, complement(g.order(), kept));
}

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
  std::vector<MixedEdge> edges(a.edges().begin(), a.edges().end());
  for (const MixedEdge& e : b.edges()) {
    edges.push_back({e.u + a.order(), e.v + a.order(), e.state});
  }
  return MixedGraph(a.order() + b.order(), std::move(edges));
}

}  // namespace mixnull
