#include "mixnull/report.hpp"

#include "mixnull/graph_text.hpp"

namespace mixnull {
namespace {

Json rational_json(const Rational& q) {
  if (const auto v = q.to_int64(); v && q.is_integer()) return *v;
  return q.str();
}

Json optional_bool(const std::optional<bool>& b) {
  return b ? Json(*b) : Json(nullptr);
}

}  // namespace

AnalysisReport analyze(const MixedGraph& g) {
  AnalysisReport r;
  r.graph = serialize_graph(g);
  const HermitianMatrix h = hermitian_adjacency(g);
  r.spectral = inertia(h);
  r.char_poly = char_poly(h);
  r.structure = structure_report(g);
  r.bounds = nullity_bounds(g.order(), r.structure.matching_number, r.structure.cyclomatic,
                            r.spectral.nullity);
  r.upper_verdict = attains_upper(g);
  r.forbidden_gap = r.bounds.s_value == 1;
  if (r.structure.components == 1 && r.structure.cyclomatic == 1) {
    r.unicyclic = unicyclic_table(g, unicyclic_skeleton(underlying(g)));
    r.unicyclic->exact = r.spectral;
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["graph"] = r.graph;

  Json spectral;
  spectral["rank"] = r.spectral.rank;
  spectral["eta"] = r.spectral.nullity;
  spectral["p_plus"] = r.spectral.positive;
  spectral["n_minus"] = r.spectral.negative;
  Json coeffs = Json::array();
  for (const Rational& c : r.char_poly.coeffs) coeffs.push_back(rational_json(c));
  spectral["char_poly"] = coeffs;
  j["spectral"] = spectral;

  Json structure;
  structure["m"] = r.structure.matching_number;
  structure["c"] = r.structure.cyclomatic;
  structure["omega"] = r.structure.components;
  structure["girth"] = r.structure.girth ? Json(*r.structure.girth) : Json("inf");
  structure["cycles_vertex_disjoint"] = r.structure.cycles_vertex_disjoint;
  if (r.structure.cycles_vertex_disjoint) {
    Json cycles = Json::array();
    for (const auto& c : r.structure.cycles) {
      cycles.push_back(
          Json{{"vertices", c.vertices}, {"f", c.forward}, {"b", c.backward}, {"sigma", c.sigma}});
    }
    structure["cycles"] = cycles;
  }
  j["structure"] = structure;

  j["bounds"] = Json{{"lower_raw", r.bounds.lower_raw},
                     {"lower", r.bounds.lower},
                     {"upper", r.bounds.upper},
                     {"eta", r.bounds.eta},
                     {"s", r.bounds.s_value}};
  j["upper_verdict"] = Json{{"attains", r.upper_verdict.attains},
                            {"cond_i", r.upper_verdict.cond_i},
                            {"cond_ii", optional_bool(r.upper_verdict.cond_ii)},
                            {"cond_iii", optional_bool(r.upper_verdict.cond_iii)}};
  j["forbidden_gap"] = r.forbidden_gap;
  if (r.unicyclic) {
    j["unicyclic"] = Json{{"case", r.unicyclic->table_case},
                          {"p_plus", r.unicyclic->positive},
                          {"n_minus", r.unicyclic->negative},
                          {"agrees", r.unicyclic->agrees()}};
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["graphs_checked"] = r.graphs_checked;
  j["orientations_checked"] = r.orientations_checked;
  j["violation_counts"] = Json::object();
  for (const auto& [k, v] : r.violation_counts) j["violation_counts"][k] = v;
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(Json{{"check", v.check},
                              {"graph_index", v.graph_index},
                              {"orientation", v.orientation ? Json(*v.orientation) : Json(nullptr)},
                              {"graph", v.graph},
                              {"detail", v.detail}});
  }
  j["violations"] = violations;
  Json hist = Json::array();
  for (const auto& [key, count] : r.s_histogram) {
    hist.push_back(Json{{"c", key.first}, {"s", key.second}, {"count", count}});
  }
  j["s_histogram"] = hist;
  Json slack = Json::array();
  for (const auto& [c, v] : r.min_lower_slack) slack.push_back(Json{{"c", c}, {"min_eta_minus_n_plus_2m", v}});
  j["min_lower_slack"] = slack;
  j["checks_run"] = Json::object();
  for (const auto& [k, v] : r.checks_run) j["checks_run"][k] = v;
  j["findings"] = Json::object();
  for (const auto& [k, v] : r.findings) j["findings"][k] = v;
  return j;
}

Json family_metadata(const FamilySpec& spec) {
  const std::size_t n = spec.expected_order();
  const std::size_t m = spec.expected_matching();
  const std::size_t c = spec.cyclomatic();
  return Json{{"s1", spec.s1},
              {"s2", spec.s2},
              {"s3", spec.s3},
              {"seed", spec.orientation_seed},
              {"n", n},
              {"m", m},
              {"c", c},
              {"k", spec.expected_k()},
              {"eta", spec.expected_nullity()},
              {"upper", n - 2 * m + 2 * c}};
}

}  // namespace mixnull
