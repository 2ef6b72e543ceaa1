#include "mixnull/characterization.hpp"

#include <algorithm>
#include <string>

#include "mixnull/errors.hpp"
#include "mixnull/invariants.hpp"

namespace mixnull {
namespace {

constexpr std::size_t kCrossCheckEdgeLimit = 24;

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

NullityBounds nullity_bounds(std::size_t order, std::size_t matching, std::size_t cyclomatic,
                             std::size_t eta) {
  NullityBounds b;
  const std::int64_t base = as_signed(order) - 2 * as_signed(matching);
  b.lower_raw = base - as_signed(cyclomatic);
  b.lower = static_cast<std::size_t>(std::max<std::int64_t>(0, b.lower_raw));
  b.upper = static_cast<std::size_t>(base + 2 * as_signed(cyclomatic));
  b.eta = eta;
  b.s_value = as_signed(b.upper) - as_signed(eta);
  return b;
}

NullityBounds nullity_bounds(const MixedGraph& g) {
  const UnderlyingGraph u = underlying(g);
  return nullity_bounds(g.order(), matching_number(u), cyclomatic_number(u), nullity(g));
}

UpperBoundSkeleton upper_bound_skeleton(const UnderlyingGraph& g) {
  UpperBoundSkeleton sk;
  CycleDecomposition dec = cycles_vertex_disjoint(g);
  sk.cond_i = dec.vertex_disjoint;
  if (!sk.cond_i) return sk;
  sk.cycles = std::move(dec.cycles);
  const ContractionResult t = contract_cycles(g);
  sk.cond_iii = matching_number(t.t_g) == matching_number(delete_vertices(g, t.o_g).graph);
  return sk;
}

UpperBoundVerdict attains_upper(const MixedGraph& g, const UpperBoundSkeleton& sk) {
  UpperBoundVerdict v;
  v.cond_i = sk.cond_i;
  if (!sk.cond_i) return v;
  bool even_ok = true;
  for (const auto& cycle : sk.cycles) {
    const std::size_t len = cycle.size();
    const std::size_t sigma = signature(g, cycle).sigma;
    if (len % 2 != 0 || sigma % 4 != len % 4) {
      even_ok = false;
      break;
    }
  }
  v.cond_ii = even_ok;
  v.cond_iii = sk.cond_iii;
  v.attains = *v.cond_ii && *v.cond_iii;
  return v;
}

UpperBoundVerdict attains_upper(const MixedGraph& g) {
  return attains_upper(g, upper_bound_skeleton(underlying(g)));
}

std::size_t cycle_rank(std::size_t n, std::size_t sigma) {
  if (n < 3) throw InputError("cycle_rank: a cycle needs n >= 3, got " + std::to_string(n));
  if (sigma > n) {
    throw InputError("cycle_rank: signature " + std::to_string(sigma) + " exceeds length " +
                     std::to_string(n));
  }
  if (n % 2 == 1) return sigma % 2 == 1 ? n - 1 : n;
  if (sigma % 2 == 1) return n;
  return (n + sigma) % 4 == 0 ? n - 2 : n;
}

UnicyclicSkeleton unicyclic_skeleton(const UnderlyingGraph& g, CycleIncidence reading) {
  if (component_count(g) != 1 || cyclomatic_number(g) != 1) {
    throw InputError("unicyclic inertia needs a connected graph with exactly one cycle");
  }
  UnicyclicSkeleton sk;
  sk.cycle = cycles_vertex_disjoint(g).cycles.front();
  sk.matching = matching_number(g);
  sk.matching_without_cycle = matching_number(delete_vertices(g, sk.cycle).graph);

  std::vector<bool> on_cycle(g.order(), false);
  for (VertexId v : sk.cycle) on_cycle[v] = true;
  sk.cycle_avoided_by_max_matchings = true;
  for (const Edge& e : g.edges()) {
    const bool touches = on_cycle[e.u] || on_cycle[e.v];
    const bool cycle_edge = on_cycle[e.u] && on_cycle[e.v];
    const bool incident =
        reading == CycleIncidence::AnyEndpoint ? touches : (touches && !cycle_edge);
    if (incident && in_some_maximum_matching(g, e.u, e.v)) {
      sk.cycle_avoided_by_max_matchings = false;
      break;
    }
  }
  return sk;
}

UnicyclicInertia unicyclic_table(const MixedGraph& g, const UnicyclicSkeleton& sk) {
  const std::size_t q = sk.cycle.size();
  const std::size_t sigma = signature(g, sk.cycle).sigma;
  const std::size_t m = sk.matching;
  UnicyclicInertia out;
  out.positive = m;
  out.negative = m;
  out.table_case = 4;
  const bool odd_cycle_saturated = sk.matching == sk.matching_without_cycle + (q - 1) / 2;

  if (q % 2 == 0 && sigma % 2 == 0 && (q - sigma) % 4 == 0 && sk.cycle_avoided_by_max_matchings) {
    out.positive = m - 1;
    out.negative = m - 1;
    out.table_case = 1;
  } else if (q % 2 == 1 && sigma % 2 == 0 && odd_cycle_saturated) {
    if ((q - sigma) % 4 == 1) {
      out.positive = m + 1;
      out.table_case = 2;
    } else {
      out.negative = m + 1;
      out.table_case = 3;
    }
  }
  return out;
}

UnicyclicInertia unicyclic_inertia(const MixedGraph& g, CycleIncidence reading) {
  UnicyclicInertia out = unicyclic_table(g, unicyclic_skeleton(underlying(g), reading));
  if (g.size() <= kCrossCheckEdgeLimit) out.exact = spectral_summary(g);
  return out;
}

bool forbidden_gap(const MixedGraph& g) {
  const NullityBounds b = nullity_bounds(g);
  return b.s_value == 1;
}

}  // namespace mixnull
