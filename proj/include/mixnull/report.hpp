#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mixnull/characterization.hpp"
#include "mixnull/families.hpp"
#include "mixnull/graph.hpp"
#include "mixnull/invariants.hpp"
#include "mixnull/spectral.hpp"
#include "mixnull/verifier.hpp"

namespace mixnull {

using Json = nlohmann::ordered_json;

struct AnalysisReport {
  std::string graph;
  SpectralSummary spectral;
  CharPoly char_poly;
  StructureReport structure;
  NullityBounds bounds;
  UpperBoundVerdict upper_verdict;
  bool forbidden_gap = false;
  /// Present for connected graphs with exactly one cycle.
  std::optional<UnicyclicInertia> unicyclic;
};

/// Throws ConsistencyError when the two rank computations disagree.
AnalysisReport analyze(const MixedGraph& g);

Json to_json(const AnalysisReport& r);
Json to_json(const VerificationReport& r);
/// Expected invariants of a family member, as promised by its parameters.
Json family_metadata(const FamilySpec& spec);

}  // namespace mixnull
