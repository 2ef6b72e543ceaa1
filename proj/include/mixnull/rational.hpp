#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace mixnull {

/// Exact rational number with an inline 64-bit fast path.
///
/// Values whose reduced numerator and denominator fit in int64 are stored
/// inline; anything larger is promoted to a GMP rational and demoted again
/// as soon as it fits. The representation is canonical: denominator > 0,
/// gcd(num, den) == 1, and a value is heap-backed only if it cannot be
/// represented inline.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Integral value if the number is an integer fitting in int64.
  std::optional<std::int64_t> to_int64() const;
  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  using wide = __int128;

  void assign_wide(wide num, wide den);
  void assign_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::string to_string(const Rational& value);

}  // namespace mixnull
