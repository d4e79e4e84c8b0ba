#include "pfk3/classify.hpp"

#include <algorithm>
#include <map>

namespace pfk3 {

QuotientInvariants quotient_invariants(const FixedPointData& d, const K3Constants& k3) {
  const Rational sign_g = g_signature_of_data(d);
  // Sign(g) = Sign(g^2) since the value is rational.
  return {Rational(k3.euler + 2 * d.fixed_count()) / 3, (Rational(k3.signature) + 2 * sign_g) / 3};
}

std::vector<long long> admissible_differences(const K3Constants& k3) {
  std::vector<long long> out;
  const long long bound = k3.max_fixed_points();
  for (long long diff = -bound; diff <= bound; ++diff)
    if (is_admissible_difference(diff, k3)) out.push_back(diff);
  return out;
}

bool is_admissible_difference(long long difference, const K3Constants& k3) {
  const long long bound = k3.max_fixed_points();
  if (difference < -bound || difference > bound) return false;
  // 9 Sign(X/G) = 3 Sign + 2 (m+ - m-)
  return (3 * k3.signature + 2 * difference) % 9 == 0;
}

namespace {

// The two linear relations obtained by solving for b+^G.
const std::map<long long, long long> kCaseEquation{{1, 3}, {3, 12}};

}  // namespace

std::optional<ActionType> admissible_row(const FixedPointData& d, const K3Constants& k3) {
  if (d.m_plus < 0 || d.m_minus < 0 || d.fixed_count() > k3.max_fixed_points()) return std::nullopt;
  const QuotientInvariants q = quotient_invariants(d, k3);
  if (!is_integral(q.euler) || !is_integral(q.signature)) return std::nullopt;

  const long long euler = to_int64(to_integer(q.euler));
  const long long sign = to_int64(to_integer(q.signature));
  // X/G is a rational homology manifold with b1 = b3 = 0.
  const long long b2 = euler - 2;
  if (b2 < 0 || (b2 + sign) % 2 != 0) return std::nullopt;
  const long long bplus = (b2 + sign) / 2;
  const long long bminus = (b2 - sign) / 2;
  if (bplus < 0 || bminus < 0 || bplus > k3.b_plus || bminus > k3.b_minus) return std::nullopt;
  // The non-fixed part of H^+ is a sum of rotation planes.
  if ((k3.b_plus - bplus) % 2 != 0) return std::nullopt;

  const auto relation = kCaseEquation.find(bplus);
  if (relation == kCaseEquation.end() || 2 * d.m_plus + d.m_minus != relation->second)
    return std::nullopt;

  ActionType row;
  row.fixed_count = d.fixed_count();
  row.m_plus = d.m_plus;
  row.m_minus = d.m_minus;
  row.b2_G = b2;
  row.bplus_G = bplus;
  row.bminus_G = bminus;
  row.sign_quotient = sign;
  row.euler_quotient = euler;
  return row;
}

std::vector<ActionType> enumerate_action_types(const K3Constants& k3) {
  std::vector<ActionType> rows;
  const long long bound = k3.max_fixed_points();
  for (long long mp = 0; mp <= bound; ++mp)
    for (long long mm = 0; mp + mm <= bound; ++mm)
      if (auto row = admissible_row({mp, mm}, k3)) rows.push_back(*row);

  for (const ActionType& row : rows)
    if (row.bplus_G != 1 && row.bplus_G != 3)
      throw Error("internal: b+^G outside {1, 3} for an admissible row");

  std::sort(rows.begin(), rows.end(), [](const ActionType& l, const ActionType& r) {
    if (l.bplus_G != r.bplus_G) return l.bplus_G > r.bplus_G;
    return l.m_plus > r.m_plus;
  });

  const auto trivial = std::count_if(rows.begin(), rows.end(),
                                     [&](const ActionType& r) { return r.bplus_G == k3.b_plus; });
  const auto other = static_cast<long long>(rows.size()) - trivial;
  long long next_a = 0, next_b = 0;
  for (ActionType& row : rows) {
    if (row.bplus_G == k3.b_plus)
      row.name = "A" + std::to_string(next_a++);
    else
      row.name = other == 1 ? std::string("B") : "B" + std::to_string(next_b++);
  }
  return rows;
}

ActionType action_type(const std::string& name) {
  static const std::vector<ActionType> rows = enumerate_action_types();
  for (const ActionType& row : rows)
    if (row.name == name) return row;
  throw Error("unknown action type '" + name + "'");
}

}  // namespace pfk3
