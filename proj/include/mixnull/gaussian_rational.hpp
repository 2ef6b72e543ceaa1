#pragma once

#include <string>

#include "mixnull/rational.hpp"

namespace mixnull {

/// Exact complex number re + im*i with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  bool is_real() const noexcept { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, always a non-negative rational.
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;
};

}  // namespace mixnull
