#include "pfk3/numeric.hpp"

#include <limits>

namespace pfk3 {

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw Error("expected an integer, got " + to_string(q));
  return boost::multiprecision::numerator(q);
}

long long to_int64(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() ||
      z < std::numeric_limits<long long>::min())
    throw Error("integer out of 64-bit range: " + z.str());
  return z.convert_to<long long>();
}

}  // namespace pfk3
