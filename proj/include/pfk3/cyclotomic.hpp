#ifndef PFK3_CYCLOTOMIC_HPP
#define PFK3_CYCLOTOMIC_HPP

#include "pfk3/numeric.hpp"

#include <iosfwd>
#include <string>

namespace pfk3 {

/// Exact element x + y*z of Q(z), z = exp(2*pi*i/3).
///
/// Values are kept in the basis {1, z}; products are reduced with
/// z^2 = -1 - z, so two numbers are equal iff their coordinates are.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(Rational x, Rational y = Rational(0))
      : x_(std::move(x)), y_(std::move(y)) {}
  CyclotomicNumber(long long x) : x_(x) {}

  /// The generator z.
  static CyclotomicNumber zeta() { return {Rational(0), Rational(1)}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }

  /// Field norm z * conjugate(z) = x^2 - x*y + y^2.
  Rational norm() const { return x_ * x_ - x_ * y_ + y_ * y_; }

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  /// Throws Error on division by zero.
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

 private:
  Rational x_{0};
  Rational y_{0};
};

CyclotomicNumber operator-(const CyclotomicNumber& z);
CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator*(CyclotomicNumber lhs, const CyclotomicNumber& rhs);
CyclotomicNumber operator/(CyclotomicNumber lhs, const CyclotomicNumber& rhs);

/// z^k for any integer k; period 3.
CyclotomicNumber zeta_power(long long k);

/// Exponent e in {0,1,2} with (z^e)^2 = z^a and (z^e)^3 = 1, i.e. e = 2a mod 3.
/// This is the square-root branch used for spin lifts. Throws if 3 | a.
int half_power(long long a);

/// Galois conjugation z -> z^2.
CyclotomicNumber conjugate(const CyclotomicNumber& z);

/// Throws Error("non-rational cyclotomic value") unless y == 0.
Rational as_rational(const CyclotomicNumber& z);

/// "x + y*z3", e.g. "1/3 + 0*z3".
std::string to_string(const CyclotomicNumber& z);
std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

/// Nonnegative residue of a mod 3.
inline int mod3(long long a) { return static_cast<int>(((a % 3) + 3) % 3); }

}  // namespace pfk3

#endif  // PFK3_CYCLOTOMIC_HPP
