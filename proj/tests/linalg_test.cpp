#include <gtest/gtest.h>

#include <climits>

#include "mixnull/errors.hpp"
#include "mixnull/families.hpp"
#include "mixnull/invariants.hpp"
#include "mixnull/spectral.hpp"
#include "support.hpp"

namespace mixnull {
namespace {

using testing::Rng;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2).str(), "1/2");
  EXPECT_EQ(Rational(-4, 2).str(), "-2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, PromotesAndDemotes) {
  const Rational big(INT64_MAX);
  const Rational sum = big + big;
  EXPECT_FALSE(sum.to_int64());
  EXPECT_EQ(sum.to_mpq(), mpq_class(mpz_class("18446744073709551614")));
  const Rational back = sum - big;
  EXPECT_EQ(back, big);
  EXPECT_EQ(back.to_int64(), INT64_MAX);
  const Rational tiny = Rational(1) / (big * big);
  EXPECT_EQ(tiny * big * big, Rational(1));
  EXPECT_EQ(Rational(INT64_MIN + 1) - Rational(1), Rational(mpq_class(mpz_class("-9223372036854775808"))));
}

TEST(Rational, OrderingAndPredicates) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(INT64_MAX) * Rational(2), Rational(INT64_MAX));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(1, 2).is_integer());
  EXPECT_EQ(Rational(-3, 7).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
}

// Property: field axioms on random values, some large enough to need GMP.
TEST(RationalProperty, FieldIdentities) {
  Rng rng(1);
  std::uniform_int_distribution<std::int64_t> small(-50, 50);
  std::uniform_int_distribution<std::int64_t> huge(INT64_MIN / 2, INT64_MAX / 2);
  auto draw = [&] {
    const bool big = std::bernoulli_distribution(0.3)(rng);
    std::int64_t d = big ? huge(rng) : small(rng);
    if (d == 0) d = 1;
    return Rational(big ? huge(rng) : small(rng), d);
  };
  for (int t = 0; t < 2000; ++t) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ((a < b), (a.to_mpq() < b.to_mpq()));
  }
}

TEST(GaussianRational, Arithmetic) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(Rational(-1)));
  EXPECT_EQ(i.conj(), -i);
  const GaussianRational z(Rational(1, 2), Rational(-3));
  EXPECT_EQ(z * z.conj(), GaussianRational(z.norm()));
  EXPECT_EQ(z / z, GaussianRational(Rational(1)));
  EXPECT_THROW(z / GaussianRational(), std::domain_error);
}

TEST(HermitianAdjacency, Examples) {
  const HermitianMatrix u = hermitian_adjacency(MixedGraph(2, {{0, 1, EdgeState::Undirected}}));
  EXPECT_EQ(u(0, 1), GaussianRational(Rational(1)));
  EXPECT_EQ(u(1, 0), GaussianRational(Rational(1)));
  const HermitianMatrix d = hermitian_adjacency(MixedGraph(2, {{0, 1, EdgeState::Forward}}));
  EXPECT_EQ(d(0, 1), GaussianRational::i());
  EXPECT_EQ(d(1, 0), -GaussianRational::i());
  EXPECT_EQ(d(0, 0), GaussianRational());
  EXPECT_EQ(hermitian_adjacency(MixedGraph(3)), HermitianMatrix(3));
}

TEST(HermitianMatrix, RejectsNonHermitian) {
  std::vector<GaussianRational> e(4);
  e[1] = GaussianRational::i();
  e[2] = GaussianRational::i();
  EXPECT_THROW(HermitianMatrix::from_entries(2, e), InputError);
  e[2] = -GaussianRational::i();
  EXPECT_NO_THROW(HermitianMatrix::from_entries(2, e));
  HermitianMatrix h(2);
  EXPECT_THROW(h.set(0, 0, GaussianRational::i()), InputError);
}

// Property: every constructed matrix equals its conjugate transpose.
TEST(HermitianProperty, Symmetry) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const HermitianMatrix h = hermitian_adjacency(testing::random_mixed(rng, 9));
    for (std::size_t r = 0; r < h.order(); ++r) {
      for (std::size_t c = 0; c < h.order(); ++c) ASSERT_EQ(h(r, c), h(c, r).conj());
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(gen_cycle(3, 0)), 3u);
  EXPECT_EQ(rank(gen_cycle(4, 0)), 2u);
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const UnderlyingGraph tree = testing::random_connected(rng, 9, 0);
    EXPECT_EQ(rank(testing::random_orientation(rng, tree)), 2 * matching_number(tree));
  }
}

TEST(CharPoly, Examples) {
  const auto coeffs = [](const MixedGraph& g) {
    std::vector<std::int64_t> out;
    for (const Rational& c : char_poly(hermitian_adjacency(g)).coeffs) out.push_back(*c.to_int64());
    return out;
  };
  EXPECT_EQ(coeffs(MixedGraph(2, {{0, 1, EdgeState::Undirected}})), (std::vector<std::int64_t>{-1, 0, 1}));
  EXPECT_EQ(coeffs(MixedGraph(2)), (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(coeffs(gen_cycle(3, 0)), (std::vector<std::int64_t>{-2, -3, 0, 1}));
  EXPECT_EQ(coeffs(MixedGraph(0)), (std::vector<std::int64_t>{1}));
}

TEST(CharPoly, RejectsNonRealRooted) {
  // x^2 + 1 has no real roots; Descartes counting cannot explain it.
  CharPoly p{{Rational(1), Rational(0), Rational(1)}};
  EXPECT_THROW(inertia_from_char_poly(p), ConsistencyError);
}

// Oracle: Leibniz determinant of xI - H at several integer points.
TEST(CharPolyProperty, MatchesLeibniz) {
  Rng rng(6);
  for (int t = 0; t < 150; ++t) {
    const MixedGraph g = testing::random_mixed(rng, 6);
    const HermitianMatrix h = hermitian_adjacency(g);
    const CharPoly p = char_poly(h);
    ASSERT_EQ(p.degree(), g.order());
    for (std::int64_t x = -3; x <= 3; ++x) {
      const GaussianRational ref = testing::leibniz_char_value(h, Rational(x));
      ASSERT_TRUE(ref.is_real());
      ASSERT_EQ(p.evaluate(Rational(x)), ref.re);
    }
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(spectral_summary(MixedGraph(2, {{0, 1, EdgeState::Undirected}})), (SpectralSummary{2, 0, 1, 1}));
  EXPECT_EQ(nullity(MixedGraph::orient(gen_star(2), std::vector<EdgeState>{EdgeState::Forward, EdgeState::Backward})),
            1u);
  EXPECT_EQ(spectral_summary(gen_cycle(3, 0)), (SpectralSummary{3, 0, 1, 2}));
}

// Oracle: Eigen's Hermitian eigensolver.
TEST(InertiaProperty, MatchesEigen) {
  Rng rng(7);
  for (int t = 0; t < 400; ++t) {
    const MixedGraph g = testing::random_mixed(rng, 10);
    const SpectralSummary exact = spectral_summary(g);
    ASSERT_EQ(exact, testing::eigen_inertia(g)) << t;
    ASSERT_EQ(exact.rank + exact.nullity, g.order());
    ASSERT_EQ(exact.positive + exact.negative, exact.rank);
  }
}

// Property: rank agreement of both routes, exhaustive for n <= 4 and all orientations.
TEST(InertiaProperty, TwoRoutesAgreeExhaustively) {
  EnumerationScope scope;
  scope.n_max = 4;
  scope.e_max = 6;
  scope.connected_only = false;
  for (const UnderlyingGraph& u : enumerate_underlying(scope)) {
    for_each_orientation(u, kDefaultOrientationCap, false, [&](const MixedGraph& g, std::uint64_t) {
      const HermitianMatrix h = hermitian_adjacency(g);
      ASSERT_EQ(inertia_from_char_poly(char_poly(h)).rank, rank_elimination(h));
    });
  }
}

// Property: the converse has the conjugate matrix and the same inertia.
TEST(InertiaProperty, ConverseInvariant) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const MixedGraph g = testing::random_mixed(rng, 8);
    const HermitianMatrix h = hermitian_adjacency(g);
    const HermitianMatrix hc = hermitian_adjacency(converse(g));
    for (std::size_t r = 0; r < h.order(); ++r) {
      for (std::size_t c = 0; c < h.order(); ++c) ASSERT_EQ(hc(r, c), h(r, c).conj());
    }
    ASSERT_EQ(spectral_summary(g), spectral_summary(converse(g)));
  }
}

// Property: rank can only drop on induced subgraphs and adds over components;
// deleting one vertex moves nullity by at most one; pendant deletion keeps it.
TEST(RankProperty, SubgraphsComponentsAndDeletion) {
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const MixedGraph g = testing::random_mixed(rng, 9);
    const std::size_t r = rank(g);
    const std::size_t eta = nullity(g);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (std::bernoulli_distribution(0.6)(rng)) keep.push_back(v);
    }
    EXPECT_LE(rank(induced_subgraph(g, keep).graph), r);

    const MixedGraph h = testing::random_mixed(rng, 6);
    EXPECT_EQ(rank(disjoint_union(g, h)), r + rank(h));

    for (VertexId v = 0; v < g.order(); ++v) {
      const VertexId x[] = {v};
      const std::size_t eta_v = nullity(delete_vertices(g, x).graph);
      EXPECT_LE(eta_v, eta + 1);
      EXPECT_LE(eta, eta_v + 1);
    }
    for (const auto& [x, y] : quasi_pendants(g)) {
      const VertexId xy[] = {x, y};
      EXPECT_EQ(nullity(delete_vertices(g, xy).graph), eta);
    }
  }
}

}  // namespace
}  // namespace mixnull
