#include "mixnull/verifier.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "mixnull/characterization.hpp"
#include "mixnull/errors.hpp"
#include "mixnull/families.hpp"
#include "mixnull/graph_text.hpp"
#include "mixnull/invariants.hpp"
#include "mixnull/spectral.hpp"

namespace mixnull {
namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

std::vector<EdgeState> all_undirected(const UnderlyingGraph& g) {
  return std::vector<EdgeState>(g.size(), EdgeState::Undirected);
}

std::size_t principal_rank(const HermitianMatrix& h, std::span<const VertexId> removed) {
  std::vector<bool> gone(h.order(), false);
  for (VertexId v : removed) gone[v] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (!gone[i]) keep.push_back(i);
  }
  HermitianMatrix sub(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const GaussianRational& x = h(keep[a], keep[b]);
      if (!x.is_zero()) sub.set(a, b, x);
    }
  }
  return rank_elimination(sub);
}

/// Orientation-independent facts about one underlying graph.
struct GraphFacts {
  const UnderlyingGraph* graph = nullptr;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t components = 0;
  std::vector<CycleMembership> membership;
  std::vector<std::size_t> cycle_edges;
  std::vector<std::pair<VertexId, VertexId>> pendant_pairs;  ///< (pendant, neighbor)
  std::vector<std::vector<VertexId>> component_vertices;
  UpperBoundSkeleton upper;
  std::optional<std::vector<VertexId>> whole_cycle;  ///< g is a single cycle
  std::optional<UnicyclicSkeleton> unicyclic;
  bool is_d = false;
};

GraphFacts gather(const UnderlyingGraph& g) {
  GraphFacts f;
  f.graph = &g;
  f.m = matching_number(g);
  f.c = cyclomatic_number(g);
  f.components = component_count(g);
  f.membership = cycle_membership(g);
  f.cycle_edges = cycle_edge_degree(g);
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.degree(x) == 1) f.pendant_pairs.emplace_back(x, g.neighbors(x)[0]);
  }
  f.component_vertices = connected_components(g);
  f.upper = upper_bound_skeleton(g);
  if (f.components == 1 && f.c == 1) {
    f.unicyclic = unicyclic_skeleton(g);
    if (f.unicyclic->cycle.size() == g.order()) f.whole_cycle = f.unicyclic->cycle;
  }
  static const std::uint64_t d_code = canonical_code(gen_D());
  f.is_d = g.order() == 5 && g.size() == 6 && canonical_code(g) == d_code;
  return f;
}

class Worker {
 public:
  Worker(const VerifyOptions& options, VerificationReport& report) : opt_(options), rep_(report) {}

  void underlying_checks(const GraphFacts& f, std::size_t graph_index) {
    const UnderlyingGraph& g = *f.graph;
    graph_index_ = graph_index;
    orientation_.reset();
    text_ = [&] { return serialize_graph(MixedGraph::orient(g, all_undirected(g))); };

    const Matching mm = maximum_matching(g);
    bool cert = is_matching(g, mm) && mm.edges.size() == f.m && !find_augmenting_path(g, mm);
    std::string detail = "blossom m=" + std::to_string(f.m);
    if (cert && g.size() <= kBruteforceEdgeLimit) {
      const std::size_t brute = matching_bruteforce(g);
      cert = brute == f.m;
      detail += " brute=" + std::to_string(brute);
    }
    record(check::kMatchingCertificate, cert, detail);

    for (VertexId v = 0; v < g.order(); ++v) {
      const VertexId removed[] = {v};
      const UnderlyingGraph gv = delete_vertices(g, removed).graph;
      const std::size_t mv = matching_number(gv);
      record(check::kMatchingVertexDeletion, mv + 1 >= f.m && mv <= f.m,
             "v=" + std::to_string(v) + " m=" + std::to_string(f.m) + " m(G-v)=" + std::to_string(mv));
      const std::size_t cv = cyclomatic_number(gv);
      bool ok = f.membership[v] == CycleMembership::None ? cv == f.c : cv + 1 <= f.c;
      if (f.cycle_edges[v] >= 3) ok = ok && cv + 2 <= f.c;
      if (f.membership[v] == CycleMembership::Several && cv + 2 > f.c) {
        ++rep_.findings["several_cycles_single_drop"];
      }
      record(check::kCyclomaticVertexDeletion, ok,
             "v=" + std::to_string(v) + " c=" + std::to_string(f.c) + " c(G-v)=" + std::to_string(cv));
    }

    for (const auto& [x, y] : f.pendant_pairs) {
      const VertexId only_y[] = {y};
      const VertexId both[] = {x, y};
      const std::size_t my = matching_number(delete_vertices(g, only_y).graph);
      const std::size_t mxy = matching_number(delete_vertices(g, both).graph);
      record(check::kPendantMatching, f.m == my + 1 && f.m == mxy + 1,
             "x=" + std::to_string(x) + " y=" + std::to_string(y) + " m=" + std::to_string(f.m) +
                 " m(G-y)=" + std::to_string(my) + " m(G-x-y)=" + std::to_string(mxy));
    }
  }

  void orientation_checks(const GraphFacts& f, const MixedGraph& mg, std::size_t graph_index,
                          std::uint64_t orientation) {
    const UnderlyingGraph& g = *f.graph;
    const std::size_t n = g.order();
    graph_index_ = graph_index;
    orientation_ = orientation;
    text_ = [&] { return serialize_graph(mg); };
    ++rep_.orientations_checked;

    const HermitianMatrix h = hermitian_adjacency(mg);
    const std::size_t r = rank_elimination(h);
    const std::size_t eta = n - r;
    std::optional<SpectralSummary> poly;
    {
      std::ostringstream d;
      bool ok = false;
      try {
        const SpectralSummary s = inertia_from_char_poly(char_poly(h));
        poly = s;
        ok = s.rank == r && s.positive + s.negative == r && s.nullity == eta;
        d << "elimination rank=" << r << " char-poly rank=" << s.rank << " p+=" << s.positive
          << " n-=" << s.negative;
      } catch (const ConsistencyError& e) {
        d << e.what();
      }
      record(check::kSpectralAgreement, ok, d.str());
    }

    const NullityBounds b = nullity_bounds(n, f.m, f.c, eta);
    rep_.s_histogram[{f.c, b.s_value}] += 1;
    const std::int64_t slack = as_signed(eta) - (as_signed(n) - 2 * as_signed(f.m));
    auto [it, fresh] = rep_.min_lower_slack.try_emplace(f.c, slack);
    if (!fresh) it->second = std::min(it->second, slack);

    const std::string band = "eta=" + std::to_string(eta) + " lower=" + std::to_string(b.lower_raw) +
                             " upper=" + std::to_string(b.upper) + " s=" + std::to_string(b.s_value);
    record(check::kNullityBounds,
           b.lower_raw <= as_signed(eta) && eta <= b.upper && b.s_value <= 3 * as_signed(f.c), band);
    record(check::kForbiddenGap, b.s_value != 1, band);

    const UpperBoundVerdict verdict = attains_upper(mg, f.upper);
    record(check::kUpperCharacterization, verdict.attains == (b.s_value == 0),
           band + " attains=" + (verdict.attains ? "true" : "false"));

    if (f.whole_cycle) {
      const std::size_t sigma = signature(mg, *f.whole_cycle).sigma;
      const std::size_t table = cycle_rank(n, sigma);
      record(check::kCycleRank, table == r,
             "sigma=" + std::to_string(sigma) + " table=" + std::to_string(table) +
                 " rank=" + std::to_string(r));
    }
    if (f.unicyclic) {
      const UnicyclicInertia t = unicyclic_table(mg, *f.unicyclic);
      std::ostringstream d;
      d << "case " << t.table_case << " table=(" << t.positive << "," << t.negative << ")";
      const bool ok = poly && poly->positive == t.positive && poly->negative == t.negative;
      if (poly) d << " exact=(" << poly->positive << "," << poly->negative << ")";
      record(check::kUnicyclicInertia, ok, d.str());
    }
    if (f.is_d) record(check::kGraphDRank, r >= 2, "rank=" + std::to_string(r));
    if (f.c == 0) {
      record(check::kTreeRank, r == 2 * f.m,
             "rank=" + std::to_string(r) + " 2m=" + std::to_string(2 * f.m));
    }

    {
      std::size_t sum = 0;
      if (f.components > 1) {
        for (const auto& comp : f.component_vertices) {
          std::vector<VertexId> others;
          std::vector<bool> in(n, false);
          for (VertexId v : comp) in[v] = true;
          for (VertexId v = 0; v < n; ++v) {
            if (!in[v]) others.push_back(v);
          }
          sum += principal_rank(h, others);
        }
      } else {
        sum = r;
      }
      record(check::kRankAdditivity, sum == r && ((r == 0) == (g.size() == 0)),
             "rank=" + std::to_string(r) + " component sum=" + std::to_string(sum));
    }

    if (!opt_.lemma_checks) return;
    for (VertexId v = 0; v < n; ++v) {
      const VertexId removed[] = {v};
      const std::size_t rv = principal_rank(h, removed);
      const std::size_t eta_v = n - 1 - rv;
      record(check::kRankMonotonicity, rv <= r,
             "v=" + std::to_string(v) + " rank=" + std::to_string(r) + " rank(G-v)=" + std::to_string(rv));
      record(check::kVertexDeletionNullity, eta_v + 1 >= eta && eta_v <= eta + 1,
             "v=" + std::to_string(v) + " eta=" + std::to_string(eta) +
                 " eta(G-v)=" + std::to_string(eta_v));
    }
    for (const auto& [x, y] : f.pendant_pairs) {
      const VertexId both[] = {x, y};
      const std::size_t eta_xy = n - 2 - principal_rank(h, both);
      record(check::kPendantNullity, eta_xy == eta,
             "x=" + std::to_string(x) + " y=" + std::to_string(y) + " eta=" + std::to_string(eta) +
                 " eta(G-x-y)=" + std::to_string(eta_xy));
      if (g.degree(y) >= 2 && f.membership[y] != CycleMembership::None) {
        record(check::kQuasiPendantOnCycle, b.s_value >= 2,
               "x=" + std::to_string(x) + " y=" + std::to_string(y) + " " + band);
      }
    }
  }

 private:
  void record(const char* name, bool ok, const std::string& detail) {
    ++rep_.checks_run[name];
    if (ok) return;
    ++rep_.violation_counts[name];
    if (rep_.violations.size() < opt_.max_violations) {
      rep_.violations.push_back({name, graph_index_, orientation_, text_(), detail});
    }
  }

  const VerifyOptions& opt_;
  VerificationReport& rep_;
  std::size_t graph_index_ = 0;
  std::optional<std::uint64_t> orientation_;
  std::function<std::string()> text_;
};

void run_worker(std::span<const UnderlyingGraph> graphs, const VerifyOptions& options, std::size_t first,
                std::size_t stride, VerificationReport& report) {
  Worker w(options, report);
  for (std::size_t i = first; i < graphs.size(); i += stride) {
    const UnderlyingGraph& g = graphs[i];
    const GraphFacts facts = gather(g);
    ++report.graphs_checked;
    w.underlying_checks(facts, i);
    for_each_orientation(g, options.orientation_cap, options.halve,
                         [&](const MixedGraph& mg, std::uint64_t index) {
                           w.orientation_checks(facts, mg, i, index);
                         });
  }
}

}  // namespace

std::uint64_t VerificationReport::violations_of(const std::string& name) const {
  const auto it = violation_counts.find(name);
  return it == violation_counts.end() ? 0 : it->second;
}

void VerificationReport::merge(const VerificationReport& other) {
  graphs_checked += other.graphs_checked;
  orientations_checked += other.orientations_checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [k, v] : other.s_histogram) s_histogram[k] += v;
  for (const auto& [c, v] : other.min_lower_slack) {
    auto [it, fresh] = min_lower_slack.try_emplace(c, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  for (const auto& [k, v] : other.checks_run) checks_run[k] += v;
  for (const auto& [k, v] : other.violation_counts) violation_counts[k] += v;
  for (const auto& [k, v] : other.findings) findings[k] += v;
}

void VerificationReport::sort_violations() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph_index, a.orientation, a.check, a.detail) <
           std::tie(b.graph_index, b.orientation, b.check, b.detail);
  });
}

VerificationReport verify_graphs(std::span<const UnderlyingGraph> graphs, const VerifyOptions& options) {
  for (const UnderlyingGraph& g : graphs) orientation_count(g, options.orientation_cap);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, graphs.size()));
  std::vector<VerificationReport> parts(jobs);
  if (jobs == 1) {
    run_worker(graphs, options, 0, 1, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          run_worker(graphs, options, w, jobs, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  VerificationReport out;
  for (const auto& p : parts) out.merge(p);
  out.sort_violations();
  if (out.violations.size() > options.max_violations) out.violations.resize(options.max_violations);
  return out;
}

VerificationReport verify_mixed(const MixedGraph& g, const VerifyOptions& options) {
  const UnderlyingGraph u = underlying(g);
  const GraphFacts facts = gather(u);
  VerificationReport report;
  Worker w(options, report);
  ++report.graphs_checked;
  w.underlying_checks(facts, 0);
  w.orientation_checks(facts, g, 0, 0);
  report.sort_violations();
  return report;
}

VerificationReport verify_all(const EnumerationScope& scope, const VerifyOptions& options) {
  VerifyOptions o = options;
  o.orientation_cap = scope.orientation_cap;
  const std::vector<UnderlyingGraph> graphs = enumerate_underlying(scope);
  return verify_graphs(graphs, o);
}

}  // namespace mixnull
