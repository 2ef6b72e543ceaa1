#include <gtest/gtest.h>

#include <set>

#include "mixnull/characterization.hpp"
#include "mixnull/errors.hpp"
#include "mixnull/families.hpp"
#include "mixnull/invariants.hpp"
#include "support.hpp"

namespace mixnull {
namespace {

struct Expect {
  FamilySpec spec;
  std::size_t n, m, c, eta, k;
};

TEST(Family, Examples) {
  for (const Expect& e : {Expect{{1, 0, 0, 0}, 5, 2, 1, 0, 3}, Expect{{0, 1, 0, 0}, 6, 3, 1, 2, 0},
                          Expect{{0, 0, 1, 0}, 7, 3, 1, 1, 2}}) {
    const FamilyGraph fam = gen_theorem2_family(e.spec);
    const UnderlyingGraph u = underlying(fam.graph);
    EXPECT_EQ(u.order(), e.n);
    EXPECT_EQ(matching_number(u), e.m);
    EXPECT_EQ(cyclomatic_number(u), e.c);
    EXPECT_EQ(nullity(fam.graph), e.eta);
    EXPECT_EQ(e.spec.expected_k(), e.k);
    EXPECT_EQ(nullity_bounds(fam.graph).s_value, static_cast<std::int64_t>(e.k));
  }
  EXPECT_THROW(gen_theorem2_family({0, 0, 0, 0}), InputError);
}

TEST(Family, Layout) {
  const FamilyGraph fam = gen_theorem2_family({1, 1, 1, 0});
  EXPECT_EQ(fam.star_leaves.size(), 4u);
  EXPECT_EQ(fam.graph.degree(fam.center), 4u);
  EXPECT_EQ(fam.graph.degree(fam.star_leaves.back()), 1u);
  ASSERT_EQ(fam.pendant_squares.size(), 1u);
  const auto& hl = fam.pendant_squares[0];
  EXPECT_EQ(hl.back(), fam.star_leaves[2]);
  EXPECT_TRUE(fam.graph.adjacent(hl[0], hl[4]));
}

// Property: nullity equals 2 s2 + s3 for all specs with c <= 4 and several
// orientation seeds; oriented cycles respect the signature constraints.
TEST(FamilyProperty, NullityFormula) {
  for (std::size_t s1 = 0; s1 <= 4; ++s1) {
    for (std::size_t s2 = 0; s1 + s2 <= 4; ++s2) {
      for (std::size_t s3 = 0; s1 + s2 + s3 <= 4; ++s3) {
        if (s1 + s2 + s3 == 0) continue;
        for (std::uint64_t seed : {0u, 1u, 7u, 99u}) {
          const FamilySpec spec{s1, s2, s3, seed};
          const FamilyGraph fam = gen_theorem2_family(spec);
          ASSERT_EQ(nullity(fam.graph), spec.expected_nullity());
          for (const auto& tri : fam.triangles) ASSERT_EQ(signature(fam.graph, tri).sigma % 2, 0u);
          for (const auto& sq : fam.squares) ASSERT_EQ(signature(fam.graph, sq).sigma % 4, 0u);
          for (const auto& hl : fam.pendant_squares) {
            const std::vector<VertexId> sq(hl.begin(), hl.begin() + 4);
            ASSERT_EQ(signature(fam.graph, sq).sigma % 4, 0u);
          }
        }
      }
    }
  }
}

TEST(ForK, Examples) {
  const auto parts = [](const FamilySpec& s) { return std::vector<std::size_t>{s.s1, s.s2, s.s3}; };
  EXPECT_EQ(parts(gen_for_k(1, 0)), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(parts(gen_for_k(1, 3)), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(parts(gen_for_k(2, 5)), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(parts(gen_for_k(2, 6)), (std::vector<std::size_t>{2, 0, 0}));
  EXPECT_THROW(gen_for_k(1, 1), InputError);
  EXPECT_THROW(gen_for_k(2, 7), InputError);
  EXPECT_THROW(gen_for_k(0, 0), InputError);
}

// Property: every k in {0, 2, ..., 3c} is realised for c <= 10, by a split
// that an exhaustive search also finds.
TEST(ForKProperty, Coverage) {
  for (std::size_t c = 1; c <= 10; ++c) {
    std::set<std::size_t> reachable;
    for (std::size_t s1 = 0; s1 <= c; ++s1) {
      for (std::size_t s3 = 0; s1 + s3 <= c; ++s3) reachable.insert(3 * s1 + 2 * s3);
    }
    EXPECT_FALSE(reachable.contains(1));
    for (std::size_t k = 0; k <= 3 * c; ++k) {
      if (k == 1) continue;
      ASSERT_TRUE(reachable.contains(k));
      const FamilySpec s = gen_for_k(c, k);
      ASSERT_EQ(s.expected_k(), k);
      ASSERT_EQ(s.cyclomatic(), c);
    }
  }
}

TEST(Cycle, Examples) {
  const MixedGraph c4 = gen_cycle(4, 0);
  EXPECT_EQ(underlying(c4), UnderlyingGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  const MixedGraph c3 = gen_cycle(3, 3);
  const VertexId order[] = {0, 1, 2};
  const auto s = signature(c3, order);
  EXPECT_EQ(s.forward, 3u);
  EXPECT_EQ(nullity(gen_cycle(4, 4)), 2u);
  EXPECT_THROW(gen_cycle(2, 0), InputError);
  EXPECT_THROW(gen_cycle(5, 6), InputError);
}

// Property: gen_cycle hits every signature and agrees with the rank table.
TEST(CycleProperty, SignatureAndRank) {
  for (std::size_t n = 3; n <= 10; ++n) {
    for (std::size_t sigma = 0; sigma <= n; ++sigma) {
      const MixedGraph g = gen_cycle(n, sigma);
      std::vector<VertexId> order(n);
      std::iota(order.begin(), order.end(), 0);
      ASSERT_EQ(signature(g, order).sigma, sigma);
      ASSERT_EQ(rank(g), cycle_rank(n, sigma));
    }
  }
}

TEST(Skeletons, Examples) {
  const UnderlyingGraph d = gen_D();
  EXPECT_EQ(d.order(), 5u);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(matching_number(d), 2u);
  EXPECT_EQ(cyclomatic_number(d), 2u);

  const UnderlyingGraph inf = gen_infinity(3, 1, 3);
  EXPECT_EQ(inf.order(), 5u);
  EXPECT_EQ(inf.size(), 6u);
  EXPECT_EQ(cycle_membership(inf)[0], CycleMembership::Several);

  EXPECT_TRUE(testing::brute_isomorphic(gen_theta(1, 1, 1), d));
  EXPECT_THROW(gen_theta(0, 0, 2), InputError);
  EXPECT_THROW(gen_infinity(2, 1, 3), InputError);

  const UnderlyingGraph inf2 = gen_infinity(4, 3, 5);
  EXPECT_EQ(inf2.order(), 4u + 5u + 3u - 2u);
  EXPECT_EQ(cyclomatic_number(inf2), 2u);
  EXPECT_TRUE(cycles_vertex_disjoint(inf2).vertex_disjoint);

  const UnderlyingGraph th = gen_theta(0, 2, 3);
  EXPECT_EQ(th.order(), 7u);
  EXPECT_EQ(cyclomatic_number(th), 2u);
  EXPECT_EQ(girth(th), 4u);
}

}  // namespace
}  // namespace mixnull
