#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mixnull/graph.hpp"

namespace mixnull {

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

/// Pairwise vertex-disjoint edges, stored with u < v in sorted order.
struct Matching {
  std::vector<Edge> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum matching by Edmonds' blossom algorithm.
Matching maximum_matching(const UnderlyingGraph& g);
std::size_t matching_number(const UnderlyingGraph& g);

inline constexpr std::size_t kBruteforceEdgeLimit = 24;

/// Exhaustive search over independent edge subsets. Throws InputError when
/// the graph has more than kBruteforceEdgeLimit edges.
std::size_t matching_bruteforce(const UnderlyingGraph& g);

bool is_matching(const UnderlyingGraph& g, const Matching& m);

/// Some M-augmenting path, found by exhaustive search over alternating
/// simple paths. Exponential; intended for certifying small graphs.
std::optional<std::vector<VertexId>> find_augmenting_path(const UnderlyingGraph& g,
                                                          const Matching& m);

/// True iff edge {a, b} belongs to at least one maximum matching.
bool in_some_maximum_matching(const UnderlyingGraph& g, VertexId a, VertexId b);

// ---------------------------------------------------------------------------
// Cycle structure
// ---------------------------------------------------------------------------

std::size_t component_count(const UnderlyingGraph& g);
/// |E| - |V| + number of components.
std::size_t cyclomatic_number(const UnderlyingGraph& g);
/// Length of a shortest cycle; nullopt (infinite girth) for forests.
std::optional<std::size_t> girth(const UnderlyingGraph& g);

/// A biconnected component. Bridges form single-edge blocks.
struct Block {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
  bool is_bridge() const { return edges.size() == 1; }
};

std::vector<Block> blocks(const UnderlyingGraph& g);

/// How many distinct cycles pass through a vertex, saturated at two.
enum class CycleMembership : std::uint8_t { None, One, Several };

std::vector<CycleMembership> cycle_membership(const UnderlyingGraph& g);

/// Number of edges at each vertex that lie on some cycle (non-bridge edges).
/// At least 3 means two cycles through the vertex leave it along different edges.
std::vector<std::size_t> cycle_edge_degree(const UnderlyingGraph& g);

struct CycleDecomposition {
  bool vertex_disjoint = true;
  /// Every cycle of the graph, present only when vertex_disjoint holds. Each
  /// cycle starts at its smallest vertex and heads to that vertex's smaller
  /// cycle neighbor.
  std::vector<std::vector<VertexId>> cycles;
};

/// Decided from the block decomposition: every block is a bridge or a cycle
/// and no vertex lies in two cycle blocks.
CycleDecomposition cycles_vertex_disjoint(const UnderlyingGraph& g);

struct CycleWithSignature {
  std::vector<VertexId> vertices;
  std::size_t forward = 0;
  std::size_t backward = 0;
  std::size_t sigma = 0;
};

/// |f - b| along the canonical traversal of `cycle`. Throws InputError if the
/// sequence is not a cycle of g.
CycleWithSignature signature(const MixedGraph& g, std::span<const VertexId> cycle);

/// Cycles contracted to single "cyclic" vertices. T_G vertices are numbered
/// in order of their smallest original vertex.
struct ContractionResult {
  UnderlyingGraph t_g;
  std::vector<VertexId> w_g;          ///< cyclic vertices of t_g, ascending
  std::vector<VertexId> o_g;          ///< original vertices lying on cycles, ascending
  UnderlyingGraph bracket_t_g;        ///< t_g induced on its non-cyclic vertices
  std::vector<VertexId> vertex_map;   ///< original vertex -> t_g vertex
};

/// Throws InputError if two cycles share a vertex (T_G is undefined then).
ContractionResult contract_cycles(const UnderlyingGraph& g);
ContractionResult contract_cycles(const MixedGraph& g);

// ---------------------------------------------------------------------------
// Pendant edge deletion
// ---------------------------------------------------------------------------

/// Deletes the lowest-index pendant vertex together with its neighbor.
/// Throws InputError on a pendant-free graph.
MixedGraph ped(const MixedGraph& g);

/// Repeats pendant edge deletion until no pendant vertex is left. Each step
/// takes the lowest-index pendant whose neighbor lies on no cycle, falling
/// back to the lowest-index pendant.
MixedGraph ped_closure(const MixedGraph& g);

// ---------------------------------------------------------------------------

struct StructureReport {
  std::size_t matching_number = 0;
  std::size_t cyclomatic = 0;
  std::size_t components = 0;
  std::optional<std::size_t> girth;
  bool cycles_vertex_disjoint = true;
  std::vector<CycleWithSignature> cycles;
};

StructureReport structure_report(const MixedGraph& g);

}  // namespace mixnull
