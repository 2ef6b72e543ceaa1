#pragma once

// Random generators and slow reference implementations shared by the tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "mixnull/enumerate.hpp"
#include "mixnull/graph.hpp"
#include "mixnull/spectral.hpp"

namespace mixnull::testing {

using Rng = std::mt19937_64;

inline EdgeState random_state(Rng& rng) {
  return static_cast<EdgeState>(std::uniform_int_distribution<int>(0, 2)(rng));
}

/// G(n, p).
inline UnderlyingGraph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) {
    for (VertexId u = 0; u < v; ++u) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return UnderlyingGraph(n, std::move(edges));
}

/// Random labelled tree plus `extra` additional random edges (fewer if the graph fills up).
inline UnderlyingGraph random_connected(Rng& rng, std::size_t n, std::size_t extra) {
  std::set<Edge> edges;
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId parent = perm[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    edges.insert({std::min(parent, perm[i]), std::max(parent, perm[i])});
  }
  const std::size_t full = n * (n - 1) / 2;
  for (std::size_t tries = 0; extra > 0 && edges.size() < full && tries < 50 * (extra + 1); ++tries) {
    const VertexId a = std::uniform_int_distribution<VertexId>(0, n - 1)(rng);
    const VertexId b = std::uniform_int_distribution<VertexId>(0, n - 1)(rng);
    if (a == b) continue;
    if (edges.insert({std::min(a, b), std::max(a, b)}).second) --extra;
  }
  return UnderlyingGraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline MixedGraph random_orientation(Rng& rng, const UnderlyingGraph& g) {
  std::vector<EdgeState> states(g.size());
  for (auto& s : states) s = random_state(rng);
  return MixedGraph::orient(g, states);
}

/// Random mixed graph on 1..n_max vertices with edge density drawn per graph.
inline MixedGraph random_mixed(Rng& rng, std::size_t n_max) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
  const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  return random_orientation(rng, random_graph(rng, n, p));
}

/// Floating-point inertia from Eigen, for cross-checking exact results.
inline SpectralSummary eigen_inertia(const MixedGraph& g) {
  const std::size_t n = g.order();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const std::complex<double> i(0.0, 1.0);
  for (const MixedEdge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    const std::complex<double> x = e.state == EdgeState::Undirected ? 1.0
                                   : e.state == EdgeState::Forward  ? i
                                                                    : -i;
    h(u, v) = x;
    h(v, u) = std::conj(x);
  }
  SpectralSummary s;
  if (n == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  for (double lambda : solver.eigenvalues()) {
    if (lambda > 1e-8) ++s.positive;
    else if (lambda < -1e-8) ++s.negative;
    else ++s.nullity;
  }
  s.rank = s.positive + s.negative;
  return s;
}

/// det(x I - H) by the Leibniz formula. Only for tiny matrices.
inline GaussianRational leibniz_char_value(const HermitianMatrix& h, const Rational& x) {
  const std::size_t n = h.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GaussianRational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    GaussianRational term(Rational(inversions % 2 == 0 ? 1 : -1));
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) {
      GaussianRational entry = -h(r, perm[r]);
      if (r == perm[r]) entry += GaussianRational(x);
      term *= entry;
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const UnderlyingGraph& a, const UnderlyingGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<VertexId> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Minimum adjacency code over all n! labelings.
inline std::uint64_t brute_canonical_code(const UnderlyingGraph& g) {
  const std::size_t n = g.order();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      edges.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
    }
    best = std::min(best, adjacency_code(UnderlyingGraph(n, std::move(edges))));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_connected(const UnderlyingGraph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

/// Isomorphism classes on exactly n vertices from all 2^(n choose 2) labelled graphs.
inline std::set<std::uint64_t> brute_census(std::size_t n, bool connected_only) {
  std::vector<Edge> pairs;
  for (VertexId v = 1; v < n; ++v) {
    for (VertexId u = 0; u < v; ++u) pairs.push_back({u, v});
  }
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    }
    UnderlyingGraph g(n, std::move(edges));
    if (connected_only && !brute_connected(g)) continue;
    classes.insert(brute_canonical_code(g));
  }
  return classes;
}

}  // namespace mixnull::testing
