#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mixnull/graph.hpp"

namespace mixnull {

/// Parameters of the star-with-gadgets construction realising
/// eta = n - 2m + 2c - k with k = 3*s1 + 2*s3.
struct FamilySpec {
  std::size_t s1 = 0;  ///< triangles with even signature
  std::size_t s2 = 0;  ///< 4-cycles with signature 0 (mod 4)
  std::size_t s3 = 0;  ///< 4-cycles carrying a pendant edge
  /// 0 gives every edge undirected; any other value draws a random admissible
  /// orientation from a generator seeded with it.
  std::uint64_t orientation_seed = 0;

  std::size_t cyclomatic() const { return s1 + s2 + s3; }
  std::size_t expected_order() const { return 3 * s1 + 4 * s2 + 5 * s3 + 2; }
  std::size_t expected_matching() const { return s1 + 2 * s2 + 2 * s3 + 1; }
  std::size_t expected_nullity() const { return 2 * s2 + s3; }
  std::size_t expected_k() const { return 3 * s1 + 2 * s3; }
};

struct FamilyGraph {
  MixedGraph graph;
  VertexId center = 0;
  std::vector<VertexId> star_leaves;
  std::vector<std::vector<VertexId>> triangles;
  std::vector<std::vector<VertexId>> squares;
  /// Each entry is the 4-cycle followed by the vertex on its pendant edge,
  /// which is also the star leaf it hangs from.
  std::vector<std::vector<VertexId>> pendant_squares;
};

/// Throws InputError when s1 + s2 + s3 == 0 and ConsistencyError if the
/// result does not have the advertised order, matching number or cyclomatic number.
FamilyGraph gen_theorem2_family(const FamilySpec& spec);

/// Smallest s1 (then s3 and s2 follow) with s1 + s2 + s3 = c and
/// 3*s1 + 2*s3 = k. Throws InputError for c = 0, k = 1, k > 3c, or when no
/// split exists.
FamilySpec gen_for_k(std::size_t c, std::size_t k);

/// Cycle 0-1-...-(n-1)-0 whose first sigma edges along that traversal are
/// directed forward and the rest undirected. Needs n >= 3 and sigma <= n.
MixedGraph gen_cycle(std::size_t n, std::size_t sigma);

/// Cycles C_p and C_q joined by a path with l vertices (l = 1 shares a vertex).
UnderlyingGraph gen_infinity(std::size_t p, std::size_t l, std::size_t q);
/// Three internally disjoint paths with p, l and q interior vertices between
/// vertices 0 and 1. At most one of p, l, q may be zero.
UnderlyingGraph gen_theta(std::size_t p, std::size_t l, std::size_t q);
/// K_{1,leaves} centred at vertex 0.
UnderlyingGraph gen_star(std::size_t leaves);
/// K_{2,3} with parts {0, 4} and {1, 2, 3}.
UnderlyingGraph gen_D();

}  // namespace mixnull
