#include "pfk3/cyclotomic.hpp"

#include <ostream>

namespace pfk3 {

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  x_ += rhs.x_;
  y_ += rhs.y_;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  x_ -= rhs.x_;
  y_ -= rhs.y_;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  // (a + bz)(c + dz) = ac + (ad + bc)z + bd z^2, with z^2 = -1 - z.
  const Rational bd = y_ * rhs.y_;
  Rational x = x_ * rhs.x_ - bd;
  Rational y = x_ * rhs.y_ + y_ * rhs.x_ - bd;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  if (rhs.is_zero()) throw Error("cyclotomic division by zero");
  const Rational n = rhs.norm();
  *this *= conjugate(rhs);
  x_ /= n;
  y_ /= n;
  return *this;
}

CyclotomicNumber operator-(const CyclotomicNumber& z) { return {-z.x(), -z.y()}; }
CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs += rhs; }
CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs -= rhs; }
CyclotomicNumber operator*(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs *= rhs; }
CyclotomicNumber operator/(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs /= rhs; }

CyclotomicNumber zeta_power(long long k) {
  switch (mod3(k)) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    default:
      return {Rational(-1), Rational(-1)};
  }
}

int half_power(long long a) {
  if (mod3(a) == 0) throw Error("weight divisible by 3 has no spin square root");
  return mod3(2 * mod3(a));
}

CyclotomicNumber conjugate(const CyclotomicNumber& z) {
  // x + y z^2 = (x - y) - y z
  return {z.x() - z.y(), -z.y()};
}

Rational as_rational(const CyclotomicNumber& z) {
  if (!z.is_rational()) throw Error("non-rational cyclotomic value: " + to_string(z));
  return z.x();
}

std::string to_string(const CyclotomicNumber& z) {
  return to_string(z.x()) + " + " + to_string(z.y()) + "*z3";
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
  return os << to_string(z);
}

}  // namespace pfk3
