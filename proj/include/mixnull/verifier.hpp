#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mixnull/enumerate.hpp"
#include "mixnull/graph.hpp"

namespace mixnull {

/// Check names used in reports.
namespace check {
inline constexpr const char* kSpectralAgreement = "spectral_agreement";
inline constexpr const char* kNullityBounds = "nullity_bounds";
inline constexpr const char* kForbiddenGap = "forbidden_gap";
inline constexpr const char* kUpperCharacterization = "upper_characterization";
inline constexpr const char* kCycleRank = "cycle_rank";
inline constexpr const char* kUnicyclicInertia = "unicyclic_inertia";
inline constexpr const char* kGraphDRank = "graph_D_rank";
inline constexpr const char* kTreeRank = "tree_rank";
inline constexpr const char* kRankMonotonicity = "rank_monotonicity";
inline constexpr const char* kRankAdditivity = "rank_additivity";
inline constexpr const char* kVertexDeletionNullity = "vertex_deletion_nullity";
inline constexpr const char* kPendantNullity = "pendant_nullity";
inline constexpr const char* kQuasiPendantOnCycle = "quasi_pendant_on_cycle";
inline constexpr const char* kMatchingCertificate = "matching_certificate";
inline constexpr const char* kMatchingVertexDeletion = "matching_vertex_deletion";
inline constexpr const char* kPendantMatching = "pendant_matching";
inline constexpr const char* kCyclomaticVertexDeletion = "cyclomatic_vertex_deletion";
}  // namespace check

struct Violation {
  std::string check;
  std::size_t graph_index = 0;
  std::optional<std::uint64_t> orientation;  ///< absent for underlying-graph checks
  std::string graph;                         ///< text format, replayable with `analyze`
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::size_t graphs_checked = 0;
  std::uint64_t orientations_checked = 0;
  std::vector<Violation> violations;
  /// (c, s) -> number of orientations. Raw s, never clamped.
  std::map<std::pair<std::size_t, std::int64_t>, std::uint64_t> s_histogram;
  /// c -> smallest eta - (n - 2m) seen.
  std::map<std::size_t, std::int64_t> min_lower_slack;
  std::map<std::string, std::uint64_t> checks_run;
  /// Exact per-check failure counts; `violations` may be truncated.
  std::map<std::string, std::uint64_t> violation_counts;
  /// Observations that are not violations, e.g. vertices on two distinct
  /// cycles whose deletion lowers c by only one.
  std::map<std::string, std::uint64_t> findings;

  bool ok() const { return violation_counts.empty(); }
  std::uint64_t violations_of(const std::string& name) const;
  /// Associative and commutative up to the final sort of violations.
  void merge(const VerificationReport& other);
  void sort_violations();

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  bool halve = false;
  std::uint64_t orientation_cap = kDefaultOrientationCap;
  /// Vertex-deletion and pendant checks (one extra rank per vertex).
  bool lemma_checks = true;
  /// Reported violations are capped; counts in checks_run stay exact.
  std::size_t max_violations = 1000;
};

/// Checks every orientation of every graph. Graph i goes to worker i % jobs.
/// Throws InputError when a graph exceeds the orientation cap.
VerificationReport verify_graphs(std::span<const UnderlyingGraph> graphs, const VerifyOptions& options);

/// Checks one mixed graph, recording violations under graph_index 0 and
/// orientation 0.
VerificationReport verify_mixed(const MixedGraph& g, const VerifyOptions& options);

VerificationReport verify_all(const EnumerationScope& scope, const VerifyOptions& options);

}  // namespace mixnull
