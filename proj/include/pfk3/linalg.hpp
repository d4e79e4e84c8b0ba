#ifndef PFK3_LINALG_HPP
#define PFK3_LINALG_HPP

// Exact dense linear algebra over Z and Q.
//
// Everything here is templated on the Eigen expression so callers can pass
// blocks, transposes and products directly. Integer routines assume an exact
// Euclidean scalar (Integer); field routines assume an exact field (Rational).

#include "pfk3/numeric.hpp"

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace pfk3 {

/// left * m * right = diag(diagonal) with left, right unimodular, the first
/// `rank` diagonal entries positive and each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> diagonal;
  Eigen::Index rank = 0;
};

/// Inertia of a real symmetric form.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int null = 0;

  int signature() const { return positive - negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

namespace detail {

// Integer kernels. Each runs first in checked 64-bit arithmetic and reruns
// with GMP integers if any intermediate value overflows, so results are
// always exact.
Integer determinant(const IntMatrix& m);
SmithForm smith(const IntMatrix& m);
SmithForm smith_without_transforms(const IntMatrix& m);
IntMatrix product(const IntMatrix& a, const IntMatrix& b);
Inertia integer_inertia(const IntMatrix& m);

// Plain matrices pass through by reference; expressions are evaluated.
template <class Derived>
decltype(auto) evaluated(const Eigen::MatrixBase<Derived>& m) {
  if constexpr (std::is_same_v<Derived, IntMatrix>)
    return (m.derived());
  else
    return IntMatrix(m);
}

}  // namespace detail

/// Integer matrix product.
template <class DerivedA, class DerivedB>
IntMatrix multiply(const Eigen::MatrixBase<DerivedA>& lhs, const Eigen::MatrixBase<DerivedB>& rhs) {
  eigen_assert(lhs.cols() == rhs.rows());
  return detail::product(detail::evaluated(lhs), detail::evaluated(rhs));
}

/// Determinant by fraction-free (Bareiss) elimination. Every intermediate
/// division is exact, so the scalar only needs to be an integral domain.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return detail::determinant(detail::evaluated(m));
  } else {
    Matrix<Scalar> a = m;
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        Eigen::Index pivot = k + 1;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return Scalar(0);
        a.row(k).swap(a.row(pivot));
        negate = !negate;
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        a(i, k) = Scalar(0);
      }
      previous = a(k, k);
    }
    return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
  }
}

/// Smith normal form with transforms; pivots on the smallest entry.
template <class Derived>
SmithForm smith_form(const Eigen::MatrixBase<Derived>& m) {
  return detail::smith(detail::evaluated(m));
}

/// The diagonal and rank of the Smith form; left and right are left empty.
template <class Derived>
SmithForm invariant_factors(const Eigen::MatrixBase<Derived>& m) {
  return detail::smith_without_transforms(detail::evaluated(m));
}

template <class Derived>
Eigen::Index integer_rank(const Eigen::MatrixBase<Derived>& m) {
  return invariant_factors(m).rank;
}

/// Columns form a Z-basis of {x in Z^n : m x = 0}. The result is saturated.
template <class Derived>
IntMatrix integer_kernel(const Eigen::MatrixBase<Derived>& m) {
  const SmithForm s = smith_form(m);
  return s.right.rightCols(m.cols() - s.rank);
}

/// Integer solution X of m X = b (b may have several columns), if one exists.
template <class DerivedA, class DerivedB>
std::optional<IntMatrix> solve_integer(const Eigen::MatrixBase<DerivedA>& m,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  const SmithForm s = smith_form(m);
  const IntMatrix c = multiply(s.left, b);
  IntMatrix y = IntMatrix::Zero(m.cols(), b.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (i < s.rank) {
        const Integer& d = s.diagonal[static_cast<std::size_t>(i)];
        if (c(i, j) % d != 0) return std::nullopt;
        y(i, j) = c(i, j) / d;
      } else if (c(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  return multiply(s.right, y);
}

/// Exact inverse over a field by Gauss-Jordan elimination; nullopt if singular.
template <class Derived>
std::optional<Matrix<typename Derived::Scalar>> exact_inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  const Eigen::Index n = m.rows();
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    a.row(k).swap(a.row(pivot));
    inv.row(k).swap(inv.row(pivot));
    const Scalar p = a(k, k);
    a.row(k) /= p;
    inv.row(k) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Scalar f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

/// Inertia by fraction-free symmetric elimination. Rational input is first
/// scaled by the common denominator, a congruence by a positive multiple of
/// the identity.
template <class Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& m) {
  eigen_assert(m.rows() == m.cols());
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    const RatMatrix source = m;
    Integer lcm = 1;
    for (const Rational& x : source.reshaped())
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    IntMatrix scaled(source.rows(), source.cols());
    for (Eigen::Index i = 0; i < source.rows(); ++i)
      for (Eigen::Index j = 0; j < source.cols(); ++j) scaled(i, j) = to_integer(Rational(source(i, j) * lcm));
    return detail::integer_inertia(scaled);
  } else {
    return detail::integer_inertia(detail::evaluated(m));
  }
}

}  // namespace pfk3

#endif  // PFK3_LINALG_HPP
