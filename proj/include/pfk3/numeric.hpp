#ifndef PFK3_NUMERIC_HPP
#define PFK3_NUMERIC_HPP

// Exact scalar and dense matrix types shared by every module.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace pfk3 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Raised for malformed input and mathematically inconsistent requests.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest-terms rendering, "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Converts q to Integer; throws Error if q has a nontrivial denominator.
Integer to_integer(const Rational& q);

/// Converts to a machine integer; throws Error on overflow.
long long to_int64(const Integer& z);

}  // namespace pfk3

#endif  // PFK3_NUMERIC_HPP
