#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mixnull/graph.hpp"
#include "mixnull/spectral.hpp"

namespace mixnull {

/// Nullity band n - 2m - c <= eta <= n - 2m + 2c. All terms are additive
/// over components, so disconnected graphs get the per-component sums.
struct NullityBounds {
  std::int64_t lower_raw = 0;  ///< n - 2m - c, may be negative
  std::size_t lower = 0;       ///< max(0, lower_raw)
  std::size_t upper = 0;       ///< n - 2m + 2c
  std::size_t eta = 0;
  std::int64_t s_value = 0;    ///< upper - eta
};

NullityBounds nullity_bounds(std::size_t order, std::size_t matching, std::size_t cyclomatic,
                             std::size_t eta);
NullityBounds nullity_bounds(const MixedGraph& g);

/// Structural test for eta = n - 2m + 2c. cond_ii and cond_iii are only
/// evaluated when cond_i holds.
struct UpperBoundVerdict {
  bool attains = false;
  bool cond_i = false;
  std::optional<bool> cond_ii;
  std::optional<bool> cond_iii;
};

/// The orientation-independent part of the upper-bound test.
struct UpperBoundSkeleton {
  bool cond_i = false;
  std::vector<std::vector<VertexId>> cycles;
  std::optional<bool> cond_iii;  ///< m(T_G) == m(G - O(G))
};

UpperBoundSkeleton upper_bound_skeleton(const UnderlyingGraph& g);
UpperBoundVerdict attains_upper(const MixedGraph& g, const UpperBoundSkeleton& skeleton);
UpperBoundVerdict attains_upper(const MixedGraph& g);

/// Rank of a mixed cycle on n vertices with signature sigma (0 <= sigma <= n).
std::size_t cycle_rank(std::size_t n, std::size_t sigma);

/// Which edges count as "incident to the cycle" in the unicyclic inertia table.
enum class CycleIncidence {
  /// Edges off the cycle with an endpoint on it (default).
  LeavingCycle,
  /// Every edge with an endpoint on the cycle, cycle edges included.
  AnyEndpoint,
};

/// Orientation-independent data for the unicyclic inertia table.
struct UnicyclicSkeleton {
  std::vector<VertexId> cycle;
  std::size_t matching = 0;
  std::size_t matching_without_cycle = 0;  ///< m(G - V(C))
  /// No maximum matching uses an edge incident to the cycle.
  bool cycle_avoided_by_max_matchings = false;
};

/// Throws InputError unless g is connected with exactly one cycle.
UnicyclicSkeleton unicyclic_skeleton(const UnderlyingGraph& g,
                                     CycleIncidence reading = CycleIncidence::LeavingCycle);

struct UnicyclicInertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  int table_case = 4;  ///< 1..3 for the special rows, 4 for "otherwise"
  std::optional<SpectralSummary> exact;
  bool agrees() const {
    return !exact || (exact->positive == positive && exact->negative == negative);
  }
};

/// Table value only; no spectrum is computed.
UnicyclicInertia unicyclic_table(const MixedGraph& g, const UnicyclicSkeleton& skeleton);

/// Table value, cross-checked against exact inertia when |E| <= 24.
UnicyclicInertia unicyclic_inertia(const MixedGraph& g,
                                   CycleIncidence reading = CycleIncidence::LeavingCycle);

/// True iff eta = n - 2m + 2c - 1, a value no mixed graph should attain.
bool forbidden_gap(const MixedGraph& g);

}  // namespace mixnull
