#include "mixnull/gaussian_rational.hpp"

#include <stdexcept>

namespace mixnull {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (rhs.im.is_zero()) {
    re *= rhs.re;
    im *= rhs.re;
    return *this;
  }
  if (rhs.re.is_zero()) {
    // (a + bi) * ci = -bc + aci
    Rational new_re = -(im * rhs.im);
    im = re * rhs.im;
    re = std::move(new_re);
    return *this;
  }
  if (im.is_zero()) {
    im = re * rhs.im;
    re *= rhs.re;
    return *this;
  }
  Rational new_re = re * rhs.re - im * rhs.im;
  Rational new_im = re * rhs.im + im * rhs.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (rhs.im.is_zero()) {
    re /= rhs.re;
    im /= rhs.re;
    return *this;
  }
  const Rational n = rhs.norm();
  *this *= rhs.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "i";
  const bool neg = im.sign() < 0;
  return re.str() + (neg ? " - " : " + ") + (neg ? (-im).str() : im.str()) + "i";
}

}  // namespace mixnull
