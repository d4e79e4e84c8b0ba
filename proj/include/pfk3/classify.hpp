#ifndef PFK3_CLASSIFY_HPP
#define PFK3_CLASSIFY_HPP

#include "pfk3/fixed_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfk3 {

/// Topological constants of the K3 surface.
struct K3Constants {
  long long euler = 24;
  long long signature = -16;
  long long b2 = 22;
  long long b_plus = 3;
  long long b_minus = 19;
  /// ind_1 D = -Sign/8.
  long long dirac_index = 2;
  /// Largest #X^G allowed by 2 + tr(g | H^2) <= 2 + b2.
  long long max_fixed_points() const { return 2 + b2; }
};

inline constexpr K3Constants kK3{};

/// One admissible type of pseudofree Z/3 action on K3.
struct ActionType {
  std::string name;
  long long fixed_count = 0;
  long long m_plus = 0;
  long long m_minus = 0;
  long long b2_G = 0;
  long long bplus_G = 0;
  long long bminus_G = 0;
  long long sign_quotient = 0;
  long long euler_quotient = 0;

  FixedPointData data() const { return {m_plus, m_minus}; }
  friend bool operator==(const ActionType&, const ActionType&) = default;
};

struct QuotientInvariants {
  Rational euler;
  Rational signature;
};

/// chi(X/G) = (chi + 2 #X^G)/3 and Sign(X/G) = (Sign + 2 Sign(g))/3, with
/// Sign(g) = (m+ - m-)/3. No integrality is assumed.
QuotientInvariants quotient_invariants(const FixedPointData& d, const K3Constants& k3 = kK3);

/// Differences m+ - m- in [-24, 24] for which Sign(X/G) is an integer,
/// ascending.
std::vector<long long> admissible_differences(const K3Constants& k3 = kK3);
bool is_admissible_difference(long long difference, const K3Constants& k3 = kK3);

/// The unnamed row for (m+, m-) if every constraint holds.
std::optional<ActionType> admissible_row(const FixedPointData& d, const K3Constants& k3 = kK3);

/// All admissible types, ordered by b+^G descending then m+ descending and
/// labelled A0, A1, ... (action trivial on H^+) and B, B1, ... (the rest).
std::vector<ActionType> enumerate_action_types(const K3Constants& k3 = kK3);

/// Looks up a row by name in enumerate_action_types(); throws Error if absent.
ActionType action_type(const std::string& name);

}  // namespace pfk3

#endif  // PFK3_CLASSIFY_HPP
