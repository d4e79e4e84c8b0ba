#ifndef PFK3_LATTICE_HPP
#define PFK3_LATTICE_HPP

// Integral lattices with a unimodular symmetric form and an order-3 isometry,
// and the realization checks for Z/3 actions on them.
//
// Conventions: vectors are integer columns in the lattice basis, the form is
// Phi(u, v) = u^T gram v and the generator acts by v -> action * v.

#include "pfk3/classify.hpp"
#include "pfk3/fixed_data.hpp"
#include "pfk3/linalg.hpp"

#include <string>
#include <vector>

namespace pfk3 {

struct GLattice {
  IntMatrix gram;
  IntMatrix action;
  std::string label;

  Eigen::Index rank() const { return gram.rows(); }
};

/// Z^a + Z[zeta]^b + Z[G]^c as a Z[G]-module.
struct ModuleDecomposition {
  long long a = 0;  // trivial
  long long b = 0;  // Z[zeta], rank 2
  long long c = 0;  // regular, rank 3

  long long rank() const { return a + 2 * b + 3 * c; }
  friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;
};

ModuleDecomposition operator+(const ModuleDecomposition& l, const ModuleDecomposition& r);

// Constructions.

/// The hyperbolic plane [[0,1],[1,0]] with trivial action.
GLattice hyperbolic();

/// The negative definite even unimodular lattice of rank 16 made of vectors
/// in (Z/2)^16 with congruent coordinates and even coordinate sum, form
/// -sum x_i^2, in the basis f_i = e_i + e_16 (i <= 9), e_i - e_16 (10..15),
/// f_16 = (e_1 + ... + e_16)/2. The generator cycles coordinates
/// (1,2,3)(4,5,6)...(3k-2,3k-1,3k). Requires 0 <= k <= 5.
GLattice gamma16(int k);

/// H + H + H with the generator permuting the three summands cyclically.
GLattice three_h_perm();

/// H^2 of the 4-torus T_z x T_{z^2}, T_w = C/(Z + zZ) with multiplication by
/// w, as the second exterior power of H^1 = Z^4 with cup product pairing.
/// Basis order e12, e13, e14, e23, e24, e34 with e1^e2^e3^e4 positive.
GLattice three_h_torus();

/// Integral matrix of multiplication by z on Z + zZ in the basis (1, z).
IntMatrix multiplication_by_zeta();

/// Block sum of forms and actions.
GLattice direct_sum(const GLattice& lhs, const GLattice& rhs);

/// Same lattice in a new basis given by the columns of a unimodular `basis`:
/// gram -> B^T G B, action -> B^-1 A B. Throws Error if B is not unimodular.
GLattice change_basis(const GLattice& lattice, const IntMatrix& basis);

// Invariants.

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LatticeVerification {
  Integer determinant;
  std::vector<CheckResult> checks;  // symmetric, unimodular, even, isometry, order 3

  bool passed() const;
  bool check(const std::string& name) const;
};

/// Symmetry, |det| = 1 (Bareiss), even diagonal, isometry A^T G A = G and
/// A^3 = I. Never throws for well-shaped input; failures are report entries.
LatticeVerification verify_lattice(const GLattice& lattice);

/// Inertia of the form.
Inertia signature(const GLattice& lattice);

struct FixedSublattice {
  IntMatrix basis;  // columns, saturated
  IntMatrix gram;   // restricted form
};

/// Integral kernel of action - I with the restricted form.
FixedSublattice fixed_sublattice(const GLattice& lattice);

/// Inertia of the form restricted to the fixed sublattice.
Inertia fixed_signature(const GLattice& lattice);

/// dim over F_3 of ker(1 + g + g^2) / im(g - 1), computed over Z from the
/// elementary divisors of the image inside the kernel lattice.
long long tate_h1_dimension(const GLattice& lattice);

/// Uses trace t = a - b, fixed rank f = a + c and Tate dimension h = b.
/// Throws Error if the action does not have order dividing 3.
ModuleDecomposition module_decomposition(const GLattice& lattice);

/// Sign(g, V) = (3 Sign(V^G) - Sign(V)) / 2, from the eigenvalue split into
/// the fixed part and rotation planes of trace -1.
long long g_signature_of_lattice(const GLattice& lattice);

/// Edmonds-Ewing module condition: V = free + trivial with trivial rank
/// fixed_count - 2. Throws Error if fixed_count < 2.
bool check_rep(const GLattice& lattice, long long fixed_count);

/// G-signature formula for g and for g^2 against the fixed-point data.
bool check_gsf(const GLattice& lattice, const FixedPointData& data);

/// 2 + tr(action) = fixed_count. Throws Error unless rank 22.
bool check_lefschetz(const GLattice& lattice, long long fixed_count);

/// The rank-22 model realizing one of the classified types:
/// A0 = torus 3H + gamma16(5), A1 = trivial 3H + gamma16(5),
/// A2 = trivial 3H + gamma16(4), B = permuted 3H + gamma16(5).
GLattice assemble_type_lattice(const ActionType& type);

/// Trivial-action 3H.
GLattice three_h_trivial();

}  // namespace pfk3

#endif  // PFK3_LATTICE_HPP
