#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mixnull {

using VertexId = std::size_t;

/// Orientation of a stored edge {u, v} with u < v. Forward means u -> v.
enum class EdgeState : std::uint8_t { Undirected, Forward, Backward };

constexpr EdgeState reversed(EdgeState s) noexcept {
  switch (s) {
    case EdgeState::Forward:
      return EdgeState::Backward;
    case EdgeState::Backward:
      return EdgeState::Forward;
    case EdgeState::Undirected:
      break;
  }
  return EdgeState::Undirected;
}

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct MixedEdge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeState state = EdgeState::Undirected;
  friend bool operator==(const MixedEdge&, const MixedEdge&) = default;
};

namespace detail {

/// Compressed adjacency lists, neighbors sorted ascending.
class Adjacency {
 public:
  Adjacency() = default;
  /// E is any type with members u and v.
  template <class E>
  Adjacency(std::size_t order, std::span<const E> edges) : offsets_(order + 1, 0) {
    for (const auto& e : edges) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < order; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(offsets_[order]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges) {
      targets_[fill[e.u]++] = e.v;
      targets_[fill[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < order; ++i) {
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
};

}  // namespace detail

/// Simple undirected graph. Edges are stored with u < v in sorted order.
class UnderlyingGraph {
 public:
  UnderlyingGraph() = default;
  explicit UnderlyingGraph(std::size_t order);
  /// Throws InputError on loops, repeated pairs or out-of-range endpoints.
  UnderlyingGraph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.neighbors(v); }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  /// Index of edge {a, b} in edges(), if present.
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

  friend bool operator==(const UnderlyingGraph& a, const UnderlyingGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  detail::Adjacency adjacency_;
};

/// Simple graph in which every edge is undirected or carries one direction.
/// Immutable once constructed.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t order);
  /// Edges may be given with either endpoint first; a reversed pair has its
  /// direction flipped so that storage is canonical. Throws InputError on
  /// loops, repeated pairs or out-of-range endpoints.
  MixedGraph(std::size_t order, std::vector<MixedEdge> edges);

  /// Assigns states[i] to underlying.edges()[i].
  static MixedGraph orient(const UnderlyingGraph& underlying, std::span<const EdgeState> states);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const MixedEdge> edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.neighbors(v); }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId a, VertexId b) const { return direction(a, b).has_value(); }

  /// State of edge {from, to} as seen travelling from `from` to `to`:
  /// Forward when the edge is directed from -> to.
  std::optional<EdgeState> direction(VertexId from, VertexId to) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  struct Trusted {};
  MixedGraph(Trusted, std::size_t order, std::vector<MixedEdge> edges);

  std::size_t order_ = 0;
  std::vector<MixedEdge> edges_;
  detail::Adjacency adjacency_;
};

/// Result of deleting vertices: the induced graph plus the old -> new index map.
template <class G>
struct Subgraph {
  G graph;
  std::vector<std::optional<VertexId>> index_map;
};

UnderlyingGraph underlying(const MixedGraph& g);

/// Reverses every directed edge; the Hermitian matrix becomes its conjugate.
MixedGraph converse(const MixedGraph& g);

Subgraph<MixedGraph> delete_vertices(const MixedGraph& g, std::span<const VertexId> removed);
Subgraph<UnderlyingGraph> delete_vertices(const UnderlyingGraph& g,
                                          std::span<const VertexId> removed);
Subgraph<MixedGraph> induced_subgraph(const MixedGraph& g, std::span<const VertexId> kept);
Subgraph<UnderlyingGraph> induced_subgraph(const UnderlyingGraph& g,
                                           std::span<const VertexId> kept);

/// Vertex-disjoint union; vertices of `b` are shifted by a.order().
MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b);

template <class G>
concept GraphLike = requires(const G& g, VertexId v) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const VertexId>>;
};

template <GraphLike G>
std::size_t degree(const G& g, VertexId v) {
  return g.neighbors(v).size();
}

template <GraphLike G>
std::vector<VertexId> pendant_vertices(const G& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).size() == 1) out.push_back(v);
  }
  return out;
}

/// Pairs (pendant, quasi-pendant): d(pendant) = 1 and its neighbor has degree >= 2.
template <GraphLike G>
std::vector<std::pair<VertexId, VertexId>> quasi_pendants(const G& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.size() == 1 && g.neighbors(nb[0]).size() >= 2) out.emplace_back(v, nb[0]);
  }
  return out;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
template <GraphLike G>
std::vector<std::vector<VertexId>> connected_components(const G& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace mixnull
