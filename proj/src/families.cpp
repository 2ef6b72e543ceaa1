#include "mixnull/families.hpp"

#include <random>
#include <string>

#include "mixnull/errors.hpp"
#include "mixnull/invariants.hpp"

namespace mixnull {
namespace {

EdgeState draw_state(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 1:
      return EdgeState::Forward;
    case 2:
      return EdgeState::Backward;
    default:
      return EdgeState::Undirected;
  }
}

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  VertexId add_vertex() { return order_++; }

  void add_edge(VertexId a, VertexId b) {
    edges_.push_back({a, b, seed_ == 0 ? EdgeState::Undirected : draw_state(rng_)});
  }

  /// Closes `cycle` with traversal-relative states whose signature satisfies `ok`.
  template <class Pred>
  void add_cycle(const std::vector<VertexId>& cycle, Pred ok) {
    const std::size_t len = cycle.size();
    std::vector<EdgeState> states(len, EdgeState::Undirected);
    if (seed_ != 0) {
      for (;;) {
        std::size_t f = 0;
        std::size_t b = 0;
        for (auto& s : states) {
          s = draw_state(rng_);
          f += s == EdgeState::Forward;
          b += s == EdgeState::Backward;
        }
        if (ok(f > b ? f - b : b - f)) break;
      }
    }
    for (std::size_t i = 0; i < len; ++i) edges_.push_back({cycle[i], cycle[(i + 1) % len], states[i]});
  }

  MixedGraph build() { return MixedGraph(order_, std::move(edges_)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::size_t order_ = 0;
  std::vector<MixedEdge> edges_;
};

void require_cycle_length(std::size_t len, const char* what) {
  if (len < 3) throw InputError(std::string(what) + ": cycle length must be at least 3");
}

}  // namespace

FamilyGraph gen_theorem2_family(const FamilySpec& spec) {
  const std::size_t c = spec.cyclomatic();
  if (c == 0) throw InputError("family construction needs s1 + s2 + s3 >= 1");

  Builder b(spec.orientation_seed);
  FamilyGraph out;
  out.center = b.add_vertex();
  for (std::size_t i = 0; i <= c; ++i) {
    const VertexId leaf = b.add_vertex();
    out.star_leaves.push_back(leaf);
    b.add_edge(out.center, leaf);
  }

  std::size_t slot = 0;
  for (std::size_t i = 0; i < spec.s1; ++i) {
    std::vector<VertexId> tri{out.star_leaves[slot++], b.add_vertex(), b.add_vertex()};
    b.add_cycle(tri, [](std::size_t sigma) { return sigma % 2 == 0; });
    out.triangles.push_back(std::move(tri));
  }
  for (std::size_t j = 0; j < spec.s2; ++j) {
    std::vector<VertexId> sq{out.star_leaves[slot++], b.add_vertex(), b.add_vertex(),
                             b.add_vertex()};
    b.add_cycle(sq, [](std::size_t sigma) { return sigma % 4 == 0; });
    out.squares.push_back(std::move(sq));
  }
  for (std::size_t l = 0; l < spec.s3; ++l) {
    const VertexId attach = out.star_leaves[slot++];
    std::vector<VertexId> sq{b.add_vertex(), b.add_vertex(), b.add_vertex(), b.add_vertex()};
    b.add_cycle(sq, [](std::size_t sigma) { return sigma % 4 == 0; });
    b.add_edge(sq[0], attach);
    sq.push_back(attach);
    out.pendant_squares.push_back(std::move(sq));
  }
  out.graph = b.build();

  const UnderlyingGraph u = underlying(out.graph);
  const std::size_t m = matching_number(u);
  const std::size_t cyc = cyclomatic_number(u);
  if (u.order() != spec.expected_order() || m != spec.expected_matching() || cyc != c) {
    throw ConsistencyError("family graph has n=" + std::to_string(u.order()) +
                           " m=" + std::to_string(m) + " c=" + std::to_string(cyc) +
                           ", expected n=" + std::to_string(spec.expected_order()) +
                           " m=" + std::to_string(spec.expected_matching()) +
                           " c=" + std::to_string(c));
  }
  return out;
}

FamilySpec gen_for_k(std::size_t c, std::size_t k) {
  if (c == 0) throw InputError("cyclomatic number must be at least 1");
  if (k == 1) {
    throw InputError("k = 1 is impossible: no mixed graph has nullity n - 2m + 2c - 1");
  }
  if (k > 3 * c) {
    throw InputError("k = " + std::to_string(k) + " exceeds 3c = " + std::to_string(3 * c));
  }
  for (std::size_t s1 = 0; s1 <= c && 3 * s1 <= k; ++s1) {
    const std::size_t rest = k - 3 * s1;
    if (rest % 2 != 0) continue;
    const std::size_t s3 = rest / 2;
    if (s1 + s3 > c) continue;
    return FamilySpec{s1, c - s1 - s3, s3, 0};
  }
  throw InputError("no split of c = " + std::to_string(c) + " realises k = " + std::to_string(k));
}

MixedGraph gen_cycle(std::size_t n, std::size_t sigma) {
  require_cycle_length(n, "gen_cycle");
  if (sigma > n) {
    throw InputError("gen_cycle: signature " + std::to_string(sigma) + " exceeds length " +
                     std::to_string(n));
  }
  std::vector<MixedEdge> edges;
  std::vector<VertexId> order;
  for (VertexId i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, i < sigma ? EdgeState::Forward : EdgeState::Undirected});
    order.push_back(i);
  }
  MixedGraph g(n, std::move(edges));
  if (signature(g, order).sigma != sigma) {
    throw ConsistencyError("gen_cycle produced the wrong signature");
  }
  return g;
}

UnderlyingGraph gen_infinity(std::size_t p, std::size_t l, std::size_t q) {
  require_cycle_length(p, "gen_infinity");
  require_cycle_length(q, "gen_infinity");
  if (l == 0) throw InputError("gen_infinity: the joining path needs l >= 1 vertices");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < p; ++i) edges.push_back({i, (i + 1) % p});
  VertexId next = p;
  VertexId tail = 0;
  for (std::size_t i = 1; i < l; ++i) {
    edges.push_back({tail, next});
    tail = next++;
  }
  VertexId prev = tail;
  for (std::size_t i = 1; i < q; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  edges.push_back({prev, tail});
  return UnderlyingGraph(next, std::move(edges));
}

UnderlyingGraph gen_theta(std::size_t p, std::size_t l, std::size_t q) {
  if ((p == 0) + (l == 0) + (q == 0) > 1) {
    throw InputError("gen_theta: at most one of the three paths may have no interior vertex");
  }
  std::vector<Edge> edges;
  VertexId next = 2;
  for (std::size_t interior : {p, l, q}) {
    VertexId prev = 0;
    for (std::size_t i = 0; i < interior; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return UnderlyingGraph(next, std::move(edges));
}

UnderlyingGraph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return UnderlyingGraph(leaves + 1, std::move(edges));
}

UnderlyingGraph gen_D() {
  return UnderlyingGraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace mixnull
