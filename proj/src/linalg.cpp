#include "pfk3/linalg.hpp"

#include <climits>
#include <numeric>

namespace pfk3::detail {
namespace {

struct Overflow {};

// Scalar operations shared by the kernels. Word is checked 64-bit
// arithmetic that throws Overflow; Big is GMP and never fails.
struct Word {
  using S = long long;

  static bool is_zero(S x) { return x == 0; }
  static bool is_one(S x) { return x == 1; }
  static bool positive(S x) { return x > 0; }
  static void add(S& t, S x) {
    if (__builtin_add_overflow(t, x, &t)) throw Overflow{};
  }
  static void add_product(S& t, S x, S y) {
    S p;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(t, p, &t)) throw Overflow{};
  }
  static void sub_product(S& t, S x, S y) {
    S p;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_sub_overflow(t, p, &t)) throw Overflow{};
  }
  static void negate(S& t) {
    if (t == LLONG_MIN) throw Overflow{};
    t = -t;
  }
  static void scale(S& t, S x) {
    if (__builtin_mul_overflow(t, x, &t)) throw Overflow{};
  }
  static S abs(S x) {
    if (x < 0) negate(x);
    return x;
  }
  static S floor_div(S a, S b) {
    if (b == -1) {
      negate(a);
      return a;
    }
    S q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static bool divides(S d, S x) { return d == -1 || x % d == 0; }
  static bool abs_less(S x, S y) { return magnitude(x) < magnitude(y); }
  static S gcd(S a, S b) {
    if (a == LLONG_MIN || b == LLONG_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static void divide_exact(S& t, S d) {
    if (d == -1)
      negate(t);
    else
      t /= d;
  }
  // (a d - b c) / e, known to be exact.
  static S bareiss(S a, S d, S b, S c, S e) {
    // Keeps both products strictly inside the int128 range.
    if (a == LLONG_MIN || b == LLONG_MIN) throw Overflow{};
    const __int128 v = (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c) / e;
    if (v > LLONG_MAX || v < LLONG_MIN) throw Overflow{};
    return static_cast<S>(v);
  }
  static S from(const Integer& x) {
    if (!mpz_fits_slong_p(x.backend().data())) throw Overflow{};
    return mpz_get_si(x.backend().data());
  }
  static Integer to(S x) { return Integer(x); }

 private:
  static unsigned long long magnitude(S x) {
    return x < 0 ? 0ULL - static_cast<unsigned long long>(x) : static_cast<unsigned long long>(x);
  }
};

struct Big {
  using S = Integer;

  static bool is_zero(const S& x) { return x.is_zero(); }
  static bool is_one(const S& x) { return x == 1; }
  static bool positive(const S& x) { return x.sign() > 0; }
  static void add(S& t, const S& x) { t += x; }
  static void add_product(S& t, const S& x, const S& y) {
    mpz_addmul(t.backend().data(), x.backend().data(), y.backend().data());
  }
  static void sub_product(S& t, const S& x, const S& y) {
    mpz_submul(t.backend().data(), x.backend().data(), y.backend().data());
  }
  static void negate(S& t) { t = -t; }
  static void scale(S& t, const S& x) { t *= x; }
  static S abs(const S& x) { return boost::multiprecision::abs(x); }
  static S floor_div(const S& a, const S& b) {
    S q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
  }
  static bool divides(const S& d, const S& x) {
    return mpz_divisible_p(x.backend().data(), d.backend().data()) != 0;
  }
  static bool abs_less(const S& x, const S& y) {
    return mpz_cmpabs(x.backend().data(), y.backend().data()) < 0;
  }
  static S gcd(const S& a, const S& b) { return boost::multiprecision::gcd(a, b); }
  static void divide_exact(S& t, const S& d) {
    mpz_divexact(t.backend().data(), t.backend().data(), d.backend().data());
  }
  static S bareiss(const S& a, const S& d, const S& b, const S& c, const S& e) {
    S v = a * d;
    sub_product(v, b, c);
    divide_exact(v, e);
    return v;
  }
  static const S& from(const Integer& x) { return x; }
  static const Integer& to(const S& x) { return x; }
};

template <class Ops>
Matrix<typename Ops::S> narrow(const IntMatrix& m) {
  Matrix<typename Ops::S> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Ops::from(m(i, j));
  return out;
}

// Default-constructed GMP integers are zero and own no heap storage, so only
// nonzero entries are assigned.
template <class Ops>
IntMatrix widen(const Matrix<typename Ops::S>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!Ops::is_zero(m(i, j))) out(i, j) = Ops::to(m(i, j));
  return out;
}

// Runs kernel<Word>, falling back to kernel<Big> on overflow.
template <template <class> class Kernel, class... Args>
auto checked_then_exact(const Args&... args) {
  try {
    return Kernel<Word>::run(args...);
  } catch (const Overflow&) {
    return Kernel<Big>::run(args...);
  }
}

template <class Ops>
struct Determinant {
  using S = typename Ops::S;

  static Integer run(const IntMatrix& m) {
    Matrix<S> a = narrow<Ops>(m);
    const Eigen::Index n = a.rows();
    if (n == 0) return 1;
    S previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (Ops::is_zero(a(k, k))) {
        Eigen::Index pivot = k + 1;
        while (pivot < n && Ops::is_zero(a(pivot, k))) ++pivot;
        if (pivot == n) return 0;
        a.row(k).swap(a.row(pivot));
        negate = !negate;
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          a(i, j) = Ops::bareiss(a(i, j), a(k, k), a(i, k), a(k, j), previous);
        a(i, k) = S(0);
      }
      previous = a(k, k);
    }
    const Integer last = Ops::to(a(n - 1, n - 1));
    return negate ? Integer(-last) : last;
  }
};

template <bool Transforms>
struct SmithKernel {
  template <class Ops>
  struct Of {
    static SmithForm run(const IntMatrix& m);
  };
};

template <bool Transforms>
template <class Ops>
SmithForm SmithKernel<Transforms>::Of<Ops>::run(const IntMatrix& m) {
  using S = typename Ops::S;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Matrix<S> a = narrow<Ops>(m);
  // Without transforms these stay empty and every update below skips them.
  Matrix<S> left = Transforms ? Matrix<S>::Identity(rows, rows) : Matrix<S>();
  Matrix<S> right = Transforms ? Matrix<S>::Identity(cols, cols) : Matrix<S>();

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (Transforms) left.row(i).swap(left.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if (Transforms) right.col(i).swap(right.col(j));
  };
  // row_i -= q * row_j
  auto sub_row = [&](Eigen::Index i, Eigen::Index j, const S& q) {
    if (Ops::is_zero(q)) return;
    for (Matrix<S>* x : {&a, &left})
      for (Eigen::Index c = 0; c < x->cols(); ++c)
        if (!Ops::is_zero((*x)(j, c))) Ops::sub_product((*x)(i, c), q, (*x)(j, c));
  };
  auto sub_col = [&](Eigen::Index i, Eigen::Index j, const S& q) {
    if (Ops::is_zero(q)) return;
    for (Matrix<S>* x : {&a, &right})
      for (Eigen::Index r = 0; r < x->rows(); ++r)
        if (!Ops::is_zero((*x)(r, j))) Ops::sub_product((*x)(r, i), q, (*x)(r, j));
  };

  Eigen::Index t = 0;
  for (bool exhausted = false; t < rows && t < cols && !exhausted;) {
    // Pivot on the smallest nonzero entry of the trailing block.
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index j = t; j < cols; ++j)
        for (Eigen::Index i = t; i < rows; ++i)
          if (!Ops::is_zero(a(i, j)) && (pi < 0 || Ops::abs_less(a(i, j), a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (Ops::is_zero(a(i, t))) continue;
        sub_row(i, t, Ops::floor_div(a(i, t), a(t, t)));
        if (!Ops::is_zero(a(i, t))) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (Ops::is_zero(a(t, j))) continue;
        sub_col(j, t, Ops::floor_div(a(t, j), a(t, t)));
        if (!Ops::is_zero(a(t, j))) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!Ops::divides(a(t, t), a(i, j))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (Matrix<S>* x : {&a, &left})
        for (Eigen::Index c = 0; c < x->cols(); ++c) Ops::add((*x)(t, c), (*x)(bad, c));
    }
    if (exhausted) break;
    if (!Ops::positive(a(t, t))) {
      for (Matrix<S>* x : {&a, &left})
        for (Eigen::Index c = 0; c < x->cols(); ++c) Ops::negate((*x)(t, c));
    }
    ++t;
  }

  SmithForm out;
  if (Transforms) {
    out.left = widen<Ops>(left);
    out.right = widen<Ops>(right);
  }
  out.rank = t;
  const Eigen::Index diag = std::min(rows, cols);
  out.diagonal.reserve(static_cast<std::size_t>(diag));
  for (Eigen::Index i = 0; i < diag; ++i) out.diagonal.push_back(Ops::to(a(i, i)));
  return out;
}

template <class Ops>
struct Product {
  using S = typename Ops::S;

  static IntMatrix run(const IntMatrix& lhs, const IntMatrix& rhs) {
    const Matrix<S> a = narrow<Ops>(lhs), b = narrow<Ops>(rhs);
    Matrix<S> c = Matrix<S>::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (Ops::is_zero(b(k, j))) continue;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
          if (!Ops::is_zero(a(i, k))) Ops::add_product(c(i, j), a(i, k), b(k, j));
      }
    return widen<Ops>(c);
  }
};

// After pivot p the trailing block is replaced by |p| times its Schur
// complement, which has the same inertia, then divided by the gcd of its
// entries. When the trailing block has zero diagonal, a row+column addition
// creates a pivot 2*m(k,j) != 0.
template <class Ops>
struct IntegerInertia {
  using S = typename Ops::S;

  static Inertia run(const IntMatrix& m) {
    Matrix<S> a = narrow<Ops>(m);
    const Eigen::Index n = a.rows();
    Inertia out;

    auto swap_sym = [&](Eigen::Index i, Eigen::Index j) {
      if (i == j) return;
      a.row(i).swap(a.row(j));
      a.col(i).swap(a.col(j));
    };

    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index pivot = k;
      while (pivot < n && Ops::is_zero(a(pivot, pivot))) ++pivot;
      if (pivot < n) {
        swap_sym(k, pivot);
      } else {
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = k; i < n && pi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (!Ops::is_zero(a(i, j))) {
              pi = i;
              pj = j;
              break;
            }
        if (pi < 0) {
          out.null += static_cast<int>(n - k);
          break;
        }
        swap_sym(k, pi);
        for (Eigen::Index c = 0; c < n; ++c) Ops::add(a(k, c), a(pj, c));
        for (Eigen::Index r = 0; r < n; ++r) Ops::add(a(r, k), a(r, pj));
      }
      const S p = a(k, k);
      const bool positive = Ops::positive(p);
      (positive ? out.positive : out.negative) += 1;
      const S scale = Ops::abs(p);
      const bool scaled = !Ops::is_one(scale);

      // a_ij <- |p| a_ij - sgn(p) a_ik a_kj on the upper half of the block.
      S content(0);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        const S f = a(i, k);
        for (Eigen::Index j = i; j < n; ++j) {
          S& x = a(i, j);
          if (scaled) Ops::scale(x, scale);
          if (!Ops::is_zero(f) && !Ops::is_zero(a(k, j))) {
            if (positive)
              Ops::sub_product(x, f, a(k, j));
            else
              Ops::add_product(x, f, a(k, j));
          }
          if (scaled) content = Ops::gcd(content, x);
        }
      }
      if (scaled && !Ops::is_zero(content) && !Ops::is_one(content))
        for (Eigen::Index i = k + 1; i < n; ++i)
          for (Eigen::Index j = i; j < n; ++j) Ops::divide_exact(a(i, j), content);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        a(i, k) = S(0);
        a(k, i) = S(0);
        for (Eigen::Index j = i + 1; j < n; ++j) a(j, i) = a(i, j);
      }
    }
    return out;
  }
};

}  // namespace

Integer determinant(const IntMatrix& m) { return checked_then_exact<Determinant>(m); }

SmithForm smith(const IntMatrix& m) { return checked_then_exact<SmithKernel<true>::Of>(m); }

SmithForm smith_without_transforms(const IntMatrix& m) {
  return checked_then_exact<SmithKernel<false>::Of>(m);
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) { return checked_then_exact<Product>(a, b); }

Inertia integer_inertia(const IntMatrix& m) { return checked_then_exact<IntegerInertia>(m); }

}  // namespace pfk3::detail
