#include "mixnull/spectral.hpp"

#include <string>
#include <utility>

#include "mixnull/errors.hpp"

namespace mixnull {
namespace {

using Dense = std::vector<GaussianRational>;

bool all_gaussian_integers(const HermitianMatrix& h) {
  for (std::size_t r = 0; r < h.order(); ++r) {
    for (std::size_t c = 0; c < h.order(); ++c) {
      if (!h(r, c).re.is_integer() || !h(r, c).im.is_integer()) return false;
    }
  }
  return true;
}

std::size_t sign_changes(const std::vector<Rational>& coeffs, bool reflect) {
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    int s = coeffs[j].sign();
    if (s == 0) continue;
    if (reflect && (j % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

HermitianMatrix::HermitianMatrix(std::size_t order)
    : order_(order), entries_(order * order) {}

HermitianMatrix HermitianMatrix::from_entries(std::size_t order, std::vector<GaussianRational> entries) {
  if (entries.size() != order * order) {
    throw InputError("expected " + std::to_string(order * order) + " entries, got " +
                     std::to_string(entries.size()));
  }
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = r; c < order; ++c) {
      if (entries[r * order + c] != entries[c * order + r].conj()) {
        throw InputError("matrix is not Hermitian at (" + std::to_string(r) + ", " +
                         std::to_string(c) + ")");
      }
    }
  }
  HermitianMatrix m(order);
  m.entries_ = std::move(entries);
  return m;
}

void HermitianMatrix::set(std::size_t row, std::size_t col, const GaussianRational& value) {
  if (row == col && !value.is_real()) {
    throw InputError("diagonal entry of a Hermitian matrix must be real");
  }
  entries_[row * order_ + col] = value;
  entries_[col * order_ + row] = value.conj();
}

HermitianMatrix hermitian_adjacency(const MixedGraph& g) {
  HermitianMatrix h(g.order());
  for (const MixedEdge& e : g.edges()) {
    switch (e.state) {
      case EdgeState::Undirected:
        h.set(e.u, e.v, GaussianRational(Rational(1)));
        break;
      case EdgeState::Forward:
        h.set(e.u, e.v, GaussianRational::i());
        break;
      case EdgeState::Backward:
        h.set(e.u, e.v, -GaussianRational::i());
        break;
    }
  }
  return h;
}

Rational CharPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string CharPoly::str() const {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag.is_one();
    if (!unit || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::size_t rank_elimination(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  Dense a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = h(r, c);
  }
  auto at = [&](std::size_t r, std::size_t c) -> GaussianRational& { return a[r * n + c]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < n; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const GaussianRational inv = GaussianRational(Rational(1)) / at(rank, col);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (at(r, col).is_zero()) continue;
      const GaussianRational factor = at(r, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (at(rank, c).is_zero()) continue;
        at(r, c) -= factor * at(rank, c);
      }
      at(r, col) = GaussianRational();
    }
    ++rank;
  }
  return rank;
}

CharPoly char_poly(const HermitianMatrix& h) {
  const std::size_t n = h.order();
  const bool integral = all_gaussian_integers(h);

  // Nonzero pattern of H, row by row.
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!h(r, c).is_zero()) support[r].push_back(c);
    }
  }

  CharPoly p;
  p.coeffs.assign(n + 1, Rational());
  p.coeffs[n] = Rational(1);

  Dense m(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = GaussianRational(Rational(1));

  Dense product(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::fill(product.begin(), product.end(), GaussianRational());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t mid : support[r]) {
        const GaussianRational& hv = h(r, mid);
        for (std::size_t c = 0; c < n; ++c) {
          const GaussianRational& mv = m[mid * n + c];
          if (mv.is_zero()) continue;
          product[r * n + c] += hv * mv;
        }
      }
    }
    GaussianRational trace;
    for (std::size_t i = 0; i < n; ++i) trace += product[i * n + i];
    if (!trace.is_real()) {
      throw ConsistencyError("char_poly: non-real trace " + trace.str() + " at step " +
                             std::to_string(k));
    }
    Rational coeff = -trace.re / Rational(static_cast<std::int64_t>(k));
    if (integral && !coeff.is_integer()) {
      throw ConsistencyError("char_poly: non-integral coefficient " + coeff.str() +
                             " for a Gaussian-integer matrix");
    }
    p.coeffs[n - k] = coeff;
    if (k == n) break;
    m.swap(product);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += GaussianRational(coeff);
  }
  return p;
}

SpectralSummary inertia_from_char_poly(const CharPoly& p) {
  const std::size_t n = p.degree();
  std::size_t nullity = 0;
  while (nullity < n && p.coeffs[nullity].is_zero()) ++nullity;

  const std::vector<Rational> reduced(p.coeffs.begin() + static_cast<std::ptrdiff_t>(nullity),
                                      p.coeffs.end());
  SpectralSummary s;
  s.nullity = nullity;
  s.positive = sign_changes(reduced, false);
  s.negative = (n - nullity) - s.positive;
  s.rank = s.positive + s.negative;
  if (sign_changes(reduced, true) != s.negative) {
    throw ConsistencyError("characteristic polynomial " + p.str() + " is not real-rooted");
  }
  return s;
}

SpectralSummary inertia(const HermitianMatrix& h) {
  const SpectralSummary s = inertia_from_char_poly(char_poly(h));
  const std::size_t r = rank_elimination(h);
  if (r != s.rank) {
    throw ConsistencyError("elimination rank " + std::to_string(r) +
                           " disagrees with characteristic-polynomial rank " +
                           std::to_string(s.rank));
  }
  return s;
}

SpectralSummary spectral_summary(const MixedGraph& g) { return inertia(hermitian_adjacency(g)); }

std::size_t rank(const MixedGraph& g) { return rank_elimination(hermitian_adjacency(g)); }

std::size_t nullity(const MixedGraph& g) { return g.order() - rank(g); }

}  // namespace mixnull
