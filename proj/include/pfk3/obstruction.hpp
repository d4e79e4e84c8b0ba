#ifndef PFK3_OBSTRUCTION_HPP
#define PFK3_OBSTRUCTION_HPP

// Smoothability verdicts from the mod-p vanishing theorem for Seiberg-Witten
// invariants of Z/p-manifolds (p = 3 here).
//
// SW values are curated facts, not computations:
//   standard K3:                  SW(c0) = +-1
//   E(2)_{p,q}, gcd = 1, p,q odd: SW(c0) = +-1
// Anything else means "no fact available", never "smoothable".

#include "pfk3/classify.hpp"
#include "pfk3/fixed_data.hpp"

#include <string>
#include <vector>

namespace pfk3 {

/// A smooth structure on the K3 topological manifold.
class SurfaceModel {
 public:
  enum class Kind { standard_k3, e2pq };

  static SurfaceModel standard_k3() { return SurfaceModel(Kind::standard_k3, 1, 1); }
  /// Elliptic surface E(2)_{p,q}. Throws Error unless p, q >= 1 and
  /// gcd(p, q) = 1 (otherwise it is not homeomorphic to K3).
  static SurfaceModel e2pq(long long p, long long q);

  Kind kind() const { return kind_; }
  long long p() const { return p_; }
  long long q() const { return q_; }

  /// "standard_k3" or "E(2)_{p,q}".
  std::string name() const;

 private:
  SurfaceModel(Kind kind, long long p, long long q) : kind_(kind), p_(p), q_(q) {}

  Kind kind_;
  long long p_;
  long long q_;
};

struct FangHypotheses {
  bool trivial_on_Hplus = false;
  bool all_small = false;
};

/// trivial_on_Hplus <=> type.bplus_G == b_plus; all_small <=> 2 k_j <= b_plus - 1
/// for every j. Throws Error if b_plus < 2.
FangHypotheses fang_hypotheses(const ActionType& type, const DiracIndex& k, long long b_plus = 3);

/// Whether SW(c0) is known to be nonzero mod 3 on this surface.
bool sw_mod3_nonzero(const SurfaceModel& surface);

enum class ObstructionStatus { unsmoothable, no_obstruction, not_applicable };

std::string_view to_string(ObstructionStatus status);

struct ObstructionVerdict {
  ObstructionStatus status = ObstructionStatus::not_applicable;
  DiracIndex k;
  FangHypotheses hypotheses;
  bool sw_fact = false;
  /// One line per hypothesis, in the order: H^+ triviality, index bound, SW fact.
  std::vector<std::string> reasons;
};

ObstructionVerdict verdict(const ActionType& type, const SurfaceModel& surface,
                           const K3Constants& k3 = kK3);

}  // namespace pfk3

#endif  // PFK3_OBSTRUCTION_HPP
