// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mixnull/characterization.hpp"
#include "mixnull/enumerate.hpp"
#include "mixnull/families.hpp"
#include "mixnull/invariants.hpp"
#include "mixnull/spectral.hpp"
#include "mixnull/verifier.hpp"

using namespace mixnull;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
  failures += !pass;
}

std::uint64_t count(const VerificationReport& r, const char* check) {
  const auto it = r.violation_counts.find(check);
  return it == r.violation_counts.end() ? 0 : it->second;
}

std::uint64_t runs(const VerificationReport& r, const char* check) {
  const auto it = r.checks_run.find(check);
  return it == r.checks_run.end() ? 0 : it->second;
}

VerificationReport sweep(std::size_t jobs) {
  EnumerationScope small;
  small.n_max = 5;
  small.e_max = 10;
  EnumerationScope six;
  six.n_min = 6;
  six.n_max = 6;
  six.e_max = 9;
  std::vector<UnderlyingGraph> graphs = enumerate_underlying(small);
  for (auto& g : enumerate_underlying(six)) graphs.push_back(std::move(g));
  VerifyOptions o;
  o.jobs = jobs;
  return verify_graphs(graphs, o);
}

VerificationReport small_sweep(std::size_t jobs) {
  EnumerationScope s;
  s.n_max = 5;
  s.e_max = 10;
  VerifyOptions o;
  o.jobs = jobs;
  return verify_all(s, o);
}

MixedGraph random_mixed(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
  const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> state(0, 2);
  std::vector<MixedEdge> edges;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      if (!coin(rng)) continue;
      const int s = state(rng);
      if (s == 0) edges.push_back({i, j});
      else if (s == 1) edges.push_back({i, j, EdgeState::Forward});
      else edges.push_back({i, j, EdgeState::Backward});
    }
  }
  return MixedGraph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t jobs = argc > 1 ? std::stoul(argv[1]) : 1;
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport full = sweep(jobs);
  std::ostringstream scope;
  scope << full.graphs_checked << " graphs, " << full.orientations_checked << " orientations";

  {
    const std::uint64_t bad = count(full, check::kForbiddenGap);
    report(1, "forbidden gap", bad == 0 && runs(full, check::kForbiddenGap) == full.orientations_checked,
           scope.str() + ", " + std::to_string(bad) + " violations");
  }
  {
    std::uint64_t s1 = 0, above = 0;
    for (const auto& [key, n] : full.s_histogram) {
      if (key.second == 1) s1 += n;
      if (key.second > 3 * static_cast<std::int64_t>(key.first) || key.second < 0) above += n;
    }
    const std::uint64_t bad = count(full, check::kNullityBounds);
    std::ostringstream d;
    d << bad << " band violations, s=1 bucket " << s1 << ", out-of-range s " << above << ", min eta-(n-2m) by c:";
    for (const auto& [c, slack] : full.min_lower_slack) d << " " << c << ":" << slack;
    report(2, "nullity bounds", bad == 0 && s1 == 0 && above == 0, d.str());
  }
  {
    const std::uint64_t bad = count(full, check::kUpperCharacterization);
    report(3, "upper bound characterization", bad == 0 && runs(full, check::kUpperCharacterization) > 0,
           std::to_string(runs(full, check::kUpperCharacterization)) + " orientations, " + std::to_string(bad) +
               " mismatches");
  }
  {
    std::uint64_t total = 0, bad = 0, expected = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
      expected += orientation_count(underlying(gen_cycle(n, 0)), kDefaultOrientationCap);
      const UnderlyingGraph c = underlying(gen_cycle(n, 0));
      std::vector<VertexId> order(n);
      std::iota(order.begin(), order.end(), 0);
      for_each_orientation(c, kDefaultOrientationCap, false, [&](const MixedGraph& g, std::uint64_t) {
        ++total;
        bad += cycle_rank(n, signature(g, order).sigma) != rank_elimination(hermitian_adjacency(g));
      });
    }
    report(4, "cycle rank table", bad == 0 && total == expected,
           std::to_string(total) + " oriented cycles, " + std::to_string(bad) + " mismatches");
  }
  {
    EnumerationScope s;
    s.n_max = 7;
    s.e_max = 7;
    std::uint64_t graphs = 0, total = 0, bad = 0;
    for (const UnderlyingGraph& g : enumerate_underlying(s)) {
      if (cyclomatic_number(g) != 1) continue;
      ++graphs;
      const UnicyclicSkeleton sk = unicyclic_skeleton(g);
      for_each_orientation(g, kDefaultOrientationCap, false, [&](const MixedGraph& mg, std::uint64_t) {
        ++total;
        const UnicyclicInertia t = unicyclic_table(mg, sk);
        const SpectralSummary exact = inertia(hermitian_adjacency(mg));
        bad += t.positive != exact.positive || t.negative != exact.negative;
      });
    }
    report(5, "unicyclic inertia table", bad == 0 && graphs > 0,
           std::to_string(graphs) + " graphs, " + std::to_string(total) + " orientations, " + std::to_string(bad) +
               " discrepancies");
  }
  {
    std::uint64_t total = 0, bad = 0;
    for_each_orientation(gen_D(), kDefaultOrientationCap, false, [&](const MixedGraph& g, std::uint64_t) {
      ++total;
      bad += rank_elimination(hermitian_adjacency(g)) < 2;
    });
    report(6, "graph D", bad == 0 && total == 729,
           std::to_string(total) + " orientations, " + std::to_string(bad) + " with rank < 2");
  }
  {
    std::uint64_t total = 0, bad = 0;
    for (std::size_t c = 1; c <= 4; ++c) {
      for (std::size_t k = 0; k <= 3 * c; ++k) {
        if (k == 1) continue;
        for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
          FamilySpec spec = gen_for_k(c, k);
          spec.orientation_seed = seed;
          const FamilyGraph fam = gen_theorem2_family(spec);
          const UnderlyingGraph u = underlying(fam.graph);
          const std::size_t n = u.order(), m = matching_number(u), cc = cyclomatic_number(u);
          const std::size_t eta = nullity(fam.graph);
          ++total;
          bad += n != 3 * spec.s1 + 4 * spec.s2 + 5 * spec.s3 + 2 || m != spec.s1 + 2 * spec.s2 + 2 * spec.s3 + 1 ||
                 cc != spec.s1 + spec.s2 + spec.s3 || cc != c ||
                 static_cast<std::int64_t>(eta) != static_cast<std::int64_t>(n + 2 * cc) -
                                                       static_cast<std::int64_t>(2 * m + k);
        }
      }
    }
    report(7, "family construction", bad == 0,
           std::to_string(total) + " (c, k, seed) cases, " + std::to_string(bad) + " mismatches");
  }
  {
    const std::uint64_t bad = count(full, check::kSpectralAgreement);
    report(8, "two-route spectral agreement", bad == 0 && runs(full, check::kSpectralAgreement) == full.orientations_checked,
           scope.str() + ", " + std::to_string(bad) + " disagreements");
  }
  {
    const char* lemmas[] = {check::kRankMonotonicity,     check::kRankAdditivity,     check::kVertexDeletionNullity,
                            check::kPendantNullity,       check::kQuasiPendantOnCycle, check::kMatchingCertificate,
                            check::kMatchingVertexDeletion, check::kPendantMatching,  check::kCyclomaticVertexDeletion,
                            check::kTreeRank};
    VerificationReport random;
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 1000; ++t) random.merge(verify_mixed(random_mixed(rng), {}));
    const VerificationReport exhaustive = small_sweep(jobs);
    std::uint64_t bad = 0, checks = 0;
    std::ostringstream d;
    for (const char* name : lemmas) {
      bad += count(random, name) + count(exhaustive, name);
      checks += runs(random, name) + runs(exhaustive, name);
    }
    const auto literal = exhaustive.findings.find("several_cycles_single_drop");
    d << random.graphs_checked << " random + " << exhaustive.graphs_checked << " exhaustive graphs, " << checks
      << " lemma checks, " << bad << " violations; vertices shared by two cycles whose deletion drops c by only 1: "
      << (literal == exhaustive.findings.end() ? 0 : literal->second);
    report(9, "lemma suite", bad == 0 && random.ok() && exhaustive.ok(), d.str());
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << " (" << secs << " s)"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
