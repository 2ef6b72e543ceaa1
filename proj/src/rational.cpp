#include "mixnull/rational.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>

namespace mixnull {
namespace {

using wide = __int128;
using uwide = unsigned __int128;

constexpr wide kInlineMax = static_cast<wide>(INT64_MAX);

bool fits_inline(wide v) { return v <= kInlineMax && v >= -kInlineMax; }

uwide abs_wide(wide v) { return v < 0 ? static_cast<uwide>(-v) : static_cast<uwide>(v); }

uwide gcd_wide(uwide a, uwide b) {
  constexpr uwide kNarrow = UINT64_MAX;
  while (b != 0) {
    if (a <= kNarrow && b <= kNarrow) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    uwide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_wide(wide v) {
  const uwide mag = abs_wide(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_inline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != LONG_MIN;
}

}  // namespace

Rational::Rational(std::int64_t value) noexcept : num_(value), den_(1) {
  if (value == INT64_MIN) assign_wide(value, 1);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign_wide(wide num, wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  const uwide g = gcd_wide(abs_wide(num), static_cast<uwide>(den));
  if (g > 1) {
    num /= static_cast<wide>(g);
    den /= static_cast<wide>(g);
  }
  if (fits_inline(num) && fits_inline(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_wide(num), mpz_from_wide(den));
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  if (mpz_fits_inline(value.get_num()) && mpz_fits_inline(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(value));
}

bool Rational::is_integer() const {
  if (!big_) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

std::optional<std::int64_t> Rational::to_int64() const {
  if (!big_ && den_ == 1) return num_;
  return std::nullopt;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == rhs.den_) {
      assign_wide(static_cast<wide>(num_) + rhs.num_, den_);
    } else {
      assign_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                  static_cast<wide>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (rhs.num_ == 0) return *this;
    if (den_ == rhs.den_) {
      assign_wide(static_cast<wide>(num_) - rhs.num_, den_);
    } else {
      assign_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                  static_cast<wide>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      assign_wide(static_cast<wide>(num_) * rhs.num_, 1);
      return *this;
    }
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    assign_wide(static_cast<wide>(num_ / g1) * (rhs.num_ / g2),
                static_cast<wide>(den_ / g2) * (rhs.den_ / g1));
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    const std::int64_t g1 = std::gcd(num_, rhs.num_);
    const std::int64_t g2 = std::gcd(den_, rhs.den_);
    assign_wide(static_cast<wide>(num_ / g1) * (rhs.den_ / g2),
                static_cast<wide>(den_ / g2) * (rhs.num_ / g1));
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    const Rational::wide a = static_cast<Rational::wide>(lhs.num_) * rhs.den_;
    const Rational::wide b = static_cast<Rational::wide>(rhs.num_) * lhs.den_;
    return a < b ? std::strong_ordering::less
                 : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace mixnull
