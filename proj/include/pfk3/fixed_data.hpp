#ifndef PFK3_FIXED_DATA_HPP
#define PFK3_FIXED_DATA_HPP

#include "pfk3/cyclotomic.hpp"

#include <array>
#include <string>
#include <string_view>

namespace pfk3 {

/// Local representation class at an isolated fixed point of a Z/3 action.
/// Rotation weights (a, b) are taken up to swap and joint negation, which
/// leaves exactly two classes.
enum class FixedPointType {
  plus,   // (1,2) ~ (2,1)
  minus,  // (1,1) ~ (2,2)
};

/// Throws Error if either weight is divisible by 3.
FixedPointType normalize_type(long long a, long long b);

/// Representative weights: plus -> (1,2), minus -> (1,1).
std::array<int, 2> representative_weights(FixedPointType t);

std::string_view to_string(FixedPointType t);

/// Fixed-point counts (m+, m-). All formulas here depend only on the counts.
struct FixedPointData {
  long long m_plus = 0;
  long long m_minus = 0;

  long long fixed_count() const { return m_plus + m_minus; }
  long long difference() const { return m_plus - m_minus; }

  /// 2 + tr(g | H^2) = #X^G can be at most 2 + b2 = 24 on a K3.
  bool satisfies_k3_lefschetz_bound() const { return fixed_count() <= 24; }

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

/// Builds K3 fixed data; throws unless both counts are nonnegative and
/// m+ + m- <= 24.
FixedPointData k3_fixed_data(long long m_plus, long long m_minus);

/// Parses "(1,2)x3,(1,1)x6" (whitespace-insensitive, "xN" optional) into
/// counts. Throws Error on malformed text or a weight divisible by 3.
FixedPointData parse_fixed_points(std::string_view text);

/// (z^a + 1)(z^b + 1) / ((z^a - 1)(z^b - 1)), the G-signature contribution
/// of a fixed point with rotation weights (a, b).
CyclotomicNumber signature_defect(long long a, long long b);
CyclotomicNumber signature_defect(FixedPointType t);

/// Spin contribution nu(P) = 1 / ((s_a - 1/s_a)(s_b - 1/s_b)) with the square
/// roots s = z^half_power(weight), i.e. the cube-root-of-unity branch.
CyclotomicNumber spin_defect(long long a, long long b);
CyclotomicNumber spin_defect(FixedPointType t);

/// Sum of signature defects for g^power (weights scaled by power).
CyclotomicNumber g_signature_sum(const FixedPointData& d, int power = 1);

/// Sum of spin defects for g^power: the Lefschetz number ind_{g^power} D.
CyclotomicNumber spin_index_sum(const FixedPointData& d, int power = 1);

/// Sign(g, X) computed from the fixed data; equals (m+ - m-)/3.
Rational g_signature_of_data(const FixedPointData& d);

/// Multiplicities of the weight-j characters C_j in ind_G D.
/// Entries may be negative (virtual representation).
struct DiracIndex {
  long long k0 = 0;
  long long k1 = 0;
  long long k2 = 0;

  long long operator[](int j) const { return j == 0 ? k0 : j == 1 ? k1 : k2; }
  long long total() const { return k0 + k1 + k2; }
  friend bool operator==(const DiracIndex&, const DiracIndex&) = default;
};

/// Solves k0 + k1 + k2 = ind1 and sum_j z^(jh) k_j = ind_{g^h} D (h = 1, 2)
/// by character inversion. Throws Error("... no consistent spin lift ...")
/// when the solution is not integral (iff m+ - m- != 6 mod 9 for ind1 = 2).
DiracIndex dirac_coefficients(const FixedPointData& d, long long ind1 = 2);

std::string to_string(const DiracIndex& k);

}  // namespace pfk3

#endif  // PFK3_FIXED_DATA_HPP
