#include "pfk3/lattice.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace pfk3 {

namespace {

IntMatrix to_integer_matrix(const RatMatrix& m, const char* what) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw Error(std::string(what) + " is not integral");
      out(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return out;
}

IntMatrix identity(Eigen::Index n) { return IntMatrix::Identity(n, n); }

bool is_identity(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

// m + c * identity
IntMatrix shifted(IntMatrix m, long long c) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += c;
  return m;
}

}  // namespace

ModuleDecomposition operator+(const ModuleDecomposition& l, const ModuleDecomposition& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c};
}

GLattice hyperbolic() {
  IntMatrix gram(2, 2);
  gram << 0, 1, 1, 0;
  return {gram, identity(2), "H"};
}

GLattice gamma16(int k) {
  if (k < 0 || k > 5) throw Error("gamma16: k must lie in [0, 5], got " + std::to_string(k));
  constexpr int n = 16;

  // Columns are the basis vectors f_i in ambient coordinates.
  RatMatrix basis = RatMatrix::Zero(n, n);
  for (int i = 0; i < 9; ++i) {
    basis(i, i) = 1;
    basis(n - 1, i) = 1;
  }
  for (int i = 9; i < 15; ++i) {
    basis(i, i) = 1;
    basis(n - 1, i) = -1;
  }
  for (int i = 0; i < n; ++i) basis(i, n - 1) = Rational(1, 2);

  RatMatrix permutation = RatMatrix::Identity(n, n);
  for (int cycle = 0; cycle < k; ++cycle) {
    const int l = 3 * cycle, m = l + 1, r = l + 2;
    permutation.col(l).setZero();
    permutation.col(m).setZero();
    permutation.col(r).setZero();
    permutation(m, l) = 1;  // e_l -> e_m -> e_r -> e_l
    permutation(r, m) = 1;
    permutation(l, r) = 1;
  }

  const RatMatrix gram = -(basis.transpose() * basis);
  const auto inverse = exact_inverse(basis);
  if (!inverse) throw Error("gamma16: basis is singular");
  const RatMatrix action = *inverse * permutation * basis;

  return {to_integer_matrix(gram, "gamma16 gram"), to_integer_matrix(action, "gamma16 action"),
          "Gamma16(k=" + std::to_string(k) + ")"};
}

GLattice three_h_perm() {
  GLattice h3 = direct_sum(direct_sum(hyperbolic(), hyperbolic()), hyperbolic());
  IntMatrix action = IntMatrix::Zero(6, 6);
  // block 0 -> block 1 -> block 2 -> block 0
  action.block(2, 0, 2, 2) = identity(2);
  action.block(4, 2, 2, 2) = identity(2);
  action.block(0, 4, 2, 2) = identity(2);
  h3.action = action;
  h3.label = "3H(perm)";
  return h3;
}

IntMatrix multiplication_by_zeta() {
  IntMatrix m(2, 2);
  m << 0, -1,
       1, -1;
  return m;
}

GLattice three_h_torus() {
  IntMatrix h1 = IntMatrix::Zero(4, 4);
  const IntMatrix z = multiplication_by_zeta();
  h1.topLeftCorner(2, 2) = z;
  h1.bottomRightCorner(2, 2) = z * z;

  constexpr std::array<std::array<int, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  auto permutation_sign = [](std::array<int, 4> p) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] == p[j]) return 0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  };

  IntMatrix gram(6, 6);
  IntMatrix action(6, 6);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const auto [i, j] = pairs[c];
      const auto [k, l] = pairs[r];
      gram(r, c) = permutation_sign({k, l, i, j});
      // coefficient of e_k ^ e_l in (A e_i) ^ (A e_j)
      action(r, c) = h1(k, i) * h1(l, j) - h1(l, i) * h1(k, j);
    }
  }
  return {gram, action, "3H(torus)"};
}

GLattice direct_sum(const GLattice& lhs, const GLattice& rhs) {
  const Eigen::Index n = lhs.rank(), m = rhs.rank();
  GLattice out;
  out.gram = IntMatrix::Zero(n + m, n + m);
  out.action = IntMatrix::Zero(n + m, n + m);
  out.gram.topLeftCorner(n, n) = lhs.gram;
  out.gram.bottomRightCorner(m, m) = rhs.gram;
  out.action.topLeftCorner(n, n) = lhs.action;
  out.action.bottomRightCorner(m, m) = rhs.action;
  out.label = lhs.label + " + " + rhs.label;
  return out;
}

GLattice change_basis(const GLattice& lattice, const IntMatrix& basis) {
  // left * U * right = I exactly when U is unimodular, and then U^-1 = right * left.
  const SmithForm s = smith_form(basis);
  const bool unimodular = basis.rows() == basis.cols() && s.rank == basis.rows() &&
                          std::all_of(s.diagonal.begin(), s.diagonal.end(),
                                      [](const Integer& d) { return d == 1; });
  if (!unimodular) throw Error("change_basis: matrix is not unimodular");
  const IntMatrix basis_inv = multiply(s.right, s.left);
  return {multiply(basis.transpose(), multiply(lattice.gram, basis)),
          multiply(basis_inv, multiply(lattice.action, basis)), lattice.label};
}

bool LatticeVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool LatticeVerification::check(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return c.passed;
  throw Error("no verification check named '" + name + "'");
}

LatticeVerification verify_lattice(const GLattice& lattice) {
  LatticeVerification report;
  const IntMatrix& g = lattice.gram;
  const IntMatrix& a = lattice.action;
  const bool square = g.rows() == g.cols();
  const bool shaped = square && a.rows() == g.rows() && a.cols() == g.cols();

  const bool symmetric = square && g == g.transpose();
  report.checks.push_back({"symmetric", symmetric, symmetric ? "" : "gram is not symmetric"});

  if (square) {
    report.determinant = bareiss_determinant(g);
    const bool unimodular = abs(report.determinant) == 1;
    report.checks.push_back({"unimodular", unimodular, "det = " + report.determinant.str()});
  } else {
    report.checks.push_back({"unimodular", false, "gram is not square"});
  }

  bool even = square;
  Eigen::Index odd_at = -1;
  for (Eigen::Index i = 0; even && i < g.rows(); ++i)
    if (g(i, i) % 2 != 0) {
      even = false;
      odd_at = i;
    }
  report.checks.push_back(
      {"even", even, even ? "" : "odd diagonal entry at index " + std::to_string(odd_at)});

  const bool isometry = shaped && multiply(a.transpose(), multiply(g, a)) == g;
  report.checks.push_back({"isometry", isometry, shaped ? "" : "action shape mismatch"});

  const bool order3 = shaped && is_identity(multiply(a, multiply(a, a)));
  report.checks.push_back({"order3", order3, order3 ? "" : "action^3 != identity"});
  return report;
}

Inertia signature(const GLattice& lattice) { return inertia(lattice.gram); }

FixedSublattice fixed_sublattice(const GLattice& lattice) {
  FixedSublattice out;
  out.basis = integer_kernel(shifted(lattice.action, -1));
  out.gram = multiply(out.basis.transpose(), multiply(lattice.gram, out.basis));
  return out;
}

Inertia fixed_signature(const GLattice& lattice) { return inertia(fixed_sublattice(lattice).gram); }

long long tate_h1_dimension(const GLattice& lattice) {
  const IntMatrix& a = lattice.action;
  const IntMatrix norm = shifted(a + multiply(a, a), 1);
  const IntMatrix kernel = integer_kernel(norm);
  if (kernel.cols() == 0) return 0;

  // im(g - 1) lies inside ker(N) because N (g - 1) = g^3 - 1 = 0.
  const auto image = solve_integer(kernel, shifted(a, -1));
  if (!image) throw Error("action has order != 3: im(g - 1) is not inside ker(1 + g + g^2)");

  const SmithForm s = invariant_factors(*image);
  if (s.rank != kernel.cols()) throw Error("action has order != 3: ker(N)/im(g - 1) is infinite");
  long long h = 0;
  for (Eigen::Index i = 0; i < s.rank; ++i) {
    const Integer& d = s.diagonal[static_cast<std::size_t>(i)];
    if (d == 1) continue;
    if (d != 3) throw Error("Tate cohomology is not killed by 3: elementary divisor " + d.str());
    ++h;
  }
  return h;
}

ModuleDecomposition module_decomposition(const GLattice& lattice) {
  const Eigen::Index n = lattice.rank();
  const IntMatrix& a = lattice.action;
  if (!is_identity(multiply(a, multiply(a, a))))
    throw Error("action has order != 3 or internal bug: action^3 != identity");

  const long long trace = to_int64(a.trace());
  const long long fixed_rank = static_cast<long long>(n - integer_rank(shifted(a, -1)));
  ModuleDecomposition m;
  m.b = tate_h1_dimension(lattice);
  m.a = trace + m.b;
  m.c = fixed_rank - m.a;
  if (m.a < 0 || m.b < 0 || m.c < 0 || m.rank() != n)
    throw Error("action has order != 3 or internal bug: inconsistent decomposition");
  return m;
}

long long g_signature_of_lattice(const GLattice& lattice) {
  const long long total = signature(lattice).signature();
  const long long fixed = fixed_signature(lattice).signature();
  if ((3 * fixed - total) % 2 != 0) throw Error("inconsistent eigenstructure: 3 Sign^G - Sign is odd");
  return (3 * fixed - total) / 2;
}

bool check_rep(const GLattice& lattice, long long fixed_count) {
  if (fixed_count < 2) throw Error("REP needs at least two fixed points, got " + std::to_string(fixed_count));
  const ModuleDecomposition m = module_decomposition(lattice);
  return m.b == 0 && m.a == fixed_count - 2;
}

bool check_gsf(const GLattice& lattice, const FixedPointData& data) {
  GLattice squared = lattice;
  squared.action = multiply(lattice.action, lattice.action);
  const CyclotomicNumber data_g = g_signature_sum(data, 1);
  const CyclotomicNumber data_g2 = g_signature_sum(data, 2);
  return CyclotomicNumber(g_signature_of_lattice(lattice)) == data_g &&
         CyclotomicNumber(g_signature_of_lattice(squared)) == data_g2;
}

bool check_lefschetz(const GLattice& lattice, long long fixed_count) {
  if (lattice.rank() != kK3.b2) throw Error("not a K3 intersection form model: rank " +
                                            std::to_string(lattice.rank()));
  return 2 + lattice.action.trace() == fixed_count;
}

GLattice three_h_trivial() {
  GLattice h3 = direct_sum(direct_sum(hyperbolic(), hyperbolic()), hyperbolic());
  h3.label = "3H(trivial)";
  return h3;
}

GLattice assemble_type_lattice(const ActionType& type) {
  if (type.name == "A0") return direct_sum(three_h_torus(), gamma16(5));
  if (type.name == "A1") return direct_sum(three_h_trivial(), gamma16(5));
  if (type.name == "A2") return direct_sum(three_h_trivial(), gamma16(4));
  if (type.name == "B") return direct_sum(three_h_perm(), gamma16(5));
  throw Error("no lattice model for action type '" + type.name + "'");
}

}  // namespace pfk3
