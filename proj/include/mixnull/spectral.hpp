#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mixnull/gaussian_rational.hpp"
#include "mixnull/graph.hpp"

namespace mixnull {

/// Dense n x n matrix equal to its conjugate transpose. Writes go through
/// set(), which maintains the mirrored entry, so the invariant cannot break.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t order = 0);
  /// Throws InputError unless entries is n*n, row-major, and Hermitian.
  static HermitianMatrix from_entries(std::size_t order, std::vector<GaussianRational> entries);

  std::size_t order() const noexcept { return order_; }
  const GaussianRational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }
  /// Sets (row, col) to value and (col, row) to its conjugate. Diagonal values must be real.
  void set(std::size_t row, std::size_t col, const GaussianRational& value);

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<GaussianRational> entries_;
};

/// Entry (k, l) is 1 for an undirected edge, i for k -> l, -i for l -> k.
HermitianMatrix hermitian_adjacency(const MixedGraph& g);

/// det(x I - H) = sum coeffs[k] x^k. Coefficients are integers for
/// adjacency matrices and coeffs.back() == 1.
struct CharPoly {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational evaluate(const Rational& x) const;
  std::string str() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

struct SpectralSummary {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const SpectralSummary&, const SpectralSummary&) = default;
};

/// Exact rank by Gaussian elimination; the pivot is the first nonzero entry
/// found scanning down the current column.
std::size_t rank_elimination(const HermitianMatrix& h);

/// Faddeev-LeVerrier recurrence in exact arithmetic. Throws ConsistencyError
/// if a coefficient comes out non-integral or non-real while the matrix has
/// Gaussian-integer entries.
CharPoly char_poly(const HermitianMatrix& h);

/// Inertia read off a real-rooted characteristic polynomial: nullity is the
/// multiplicity of the root 0 and the positive/negative counts are Descartes
/// sign changes of p(x)/x^nullity and its reflection. Throws ConsistencyError
/// if the two sign-change counts do not account for every nonzero root.
SpectralSummary inertia_from_char_poly(const CharPoly& p);

/// Combines both routes; throws ConsistencyError when the elimination rank
/// disagrees with the characteristic polynomial.
SpectralSummary inertia(const HermitianMatrix& h);

SpectralSummary spectral_summary(const MixedGraph& g);
std::size_t rank(const MixedGraph& g);
std::size_t nullity(const MixedGraph& g);

}  // namespace mixnull
