#include "pfk3/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace pfk3 {

SurfaceModel SurfaceModel::e2pq(long long p, long long q) {
  if (p < 1 || q < 1) throw Error("E(2)_{p,q} needs positive multiplicities");
  if (std::gcd(p, q) != 1)
    throw Error("not homeomorphic to K3: gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                ") != 1");
  return SurfaceModel(Kind::e2pq, p, q);
}

std::string SurfaceModel::name() const {
  if (kind_ == Kind::standard_k3) return "standard_k3";
  return "E(2)_{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
}

FangHypotheses fang_hypotheses(const ActionType& type, const DiracIndex& k, long long b_plus) {
  if (b_plus < 2) throw Error("Fang's theorem hypothesis violated: b+ = " + std::to_string(b_plus) + " < 2");
  FangHypotheses h;
  h.trivial_on_Hplus = type.bplus_G == b_plus;
  h.all_small = true;
  for (int j = 0; j < 3; ++j) h.all_small = h.all_small && 2 * k[j] <= b_plus - 1;
  return h;
}

bool sw_mod3_nonzero(const SurfaceModel& surface) {
  switch (surface.kind()) {
    case SurfaceModel::Kind::standard_k3:
      return true;
    case SurfaceModel::Kind::e2pq:
      // E(2)_{1,1} is the standard K3.
      return std::gcd(surface.p(), surface.q()) == 1 && surface.p() % 2 == 1 && surface.q() % 2 == 1;
  }
  return false;
}

std::string_view to_string(ObstructionStatus status) {
  switch (status) {
    case ObstructionStatus::unsmoothable:
      return "UNSMOOTHABLE";
    case ObstructionStatus::no_obstruction:
      return "NO_OBSTRUCTION";
    case ObstructionStatus::not_applicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

ObstructionVerdict verdict(const ActionType& type, const SurfaceModel& surface, const K3Constants& k3) {
  ObstructionVerdict v;
  v.k = dirac_coefficients(type.data(), k3.dirac_index);
  v.hypotheses = fang_hypotheses(type, v.k, k3.b_plus);
  v.sw_fact = sw_mod3_nonzero(surface);

  auto mark = [](bool ok) { return std::string(ok ? "[pass] " : "[fail] "); };
  const long long largest = 2 * std::max({v.k.k0, v.k.k1, v.k.k2});
  v.reasons.push_back(mark(v.hypotheses.trivial_on_Hplus) + "action trivial on H+: b+^G = " +
                      std::to_string(type.bplus_G) + ", b+ = " + std::to_string(k3.b_plus));
  v.reasons.push_back(mark(v.hypotheses.all_small) + "2k_j <= b+ - 1 for all j: k = " +
                      to_string(v.k) + ", max 2k_j = " + std::to_string(largest) +
                      ", b+ - 1 = " + std::to_string(k3.b_plus - 1));
  v.reasons.push_back(mark(v.sw_fact) + "SW(c0) nonzero mod 3 on " + surface.name() +
                      (v.sw_fact ? ": SW(c0) = +-1" : ": no known value"));

  if (!v.hypotheses.trivial_on_Hplus || !v.sw_fact)
    v.status = ObstructionStatus::not_applicable;
  else if (v.hypotheses.all_small)
    v.status = ObstructionStatus::unsmoothable;
  else
    v.status = ObstructionStatus::no_obstruction;
  return v;
}

}  // namespace pfk3
