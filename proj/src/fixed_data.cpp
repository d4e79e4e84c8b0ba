#include "pfk3/fixed_data.hpp"

#include <array>

#include <cctype>
#include <charconv>
#include <string>

namespace pfk3 {

FixedPointType normalize_type(long long a, long long b) {
  const int ra = mod3(a);
  const int rb = mod3(b);
  if (ra == 0 || rb == 0) throw Error("action not pseudofree at this point: weight divisible by 3");
  return ra == rb ? FixedPointType::minus : FixedPointType::plus;
}

std::array<int, 2> representative_weights(FixedPointType t) {
  return t == FixedPointType::plus ? std::array<int, 2>{1, 2} : std::array<int, 2>{1, 1};
}

std::string_view to_string(FixedPointType t) {
  return t == FixedPointType::plus ? "+" : "-";
}

FixedPointData k3_fixed_data(long long m_plus, long long m_minus) {
  if (m_plus < 0 || m_minus < 0) throw Error("fixed point counts must be nonnegative");
  FixedPointData d{m_plus, m_minus};
  if (!d.satisfies_k3_lefschetz_bound())
    throw Error("m+ + m- = " + std::to_string(d.fixed_count()) +
                " exceeds the K3 Lefschetz bound 24");
  return d;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip_space();
    long long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("malformed fixed point list at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FixedPointData parse_fixed_points(std::string_view text) {
  Cursor in(text);
  FixedPointData d;
  if (in.done()) return d;
  do {
    in.expect('(');
    const long long a = in.integer();
    in.expect(',');
    const long long b = in.integer();
    in.expect(')');
    long long count = 1;
    if (in.accept('x') || in.accept('X')) {
      count = in.integer();
      if (count < 0) in.fail("negative multiplicity");
    }
    (normalize_type(a, b) == FixedPointType::plus ? d.m_plus : d.m_minus) += count;
  } while (in.accept(','));
  if (!in.done()) in.fail("trailing characters");
  return d;
}

namespace {

using DefectTable = std::array<std::array<CyclotomicNumber, 3>, 3>;

// Defects depend only on the weights mod 3; index 0 is unused.
template <class Defect>
DefectTable tabulate(Defect defect) {
  DefectTable table;
  for (long long a : {1, 2})
    for (long long b : {1, 2}) table[a][b] = defect(a, b);
  return table;
}

}  // namespace

CyclotomicNumber signature_defect(long long a, long long b) {
  normalize_type(a, b);
  static const DefectTable table = tabulate([](long long x, long long y) {
    const CyclotomicNumber zx = zeta_power(x);
    const CyclotomicNumber zy = zeta_power(y);
    const CyclotomicNumber one(1);
    return (zx + one) * (zy + one) / ((zx - one) * (zy - one));
  });
  return table[mod3(a)][mod3(b)];
}

CyclotomicNumber signature_defect(FixedPointType t) {
  const auto w = representative_weights(t);
  return signature_defect(w[0], w[1]);
}

CyclotomicNumber spin_defect(long long a, long long b) {
  normalize_type(a, b);
  static const DefectTable table = tabulate([](long long x, long long y) {
    auto factor = [](long long weight) {
      const int e = half_power(weight);
      return zeta_power(e) - zeta_power(-e);
    };
    return CyclotomicNumber(1) / (factor(x) * factor(y));
  });
  return table[mod3(a)][mod3(b)];
}

CyclotomicNumber spin_defect(FixedPointType t) {
  const auto w = representative_weights(t);
  return spin_defect(w[0], w[1]);
}

namespace {

template <class Defect>
CyclotomicNumber sum_over_points(const FixedPointData& d, int power, Defect defect) {
  CyclotomicNumber total;
  for (FixedPointType t : {FixedPointType::plus, FixedPointType::minus}) {
    const long long count = t == FixedPointType::plus ? d.m_plus : d.m_minus;
    if (count == 0) continue;
    const auto w = representative_weights(t);
    total += CyclotomicNumber(count) * defect(power * w[0], power * w[1]);
  }
  return total;
}

}  // namespace

CyclotomicNumber g_signature_sum(const FixedPointData& d, int power) {
  return sum_over_points(d, power, [](long long a, long long b) { return signature_defect(a, b); });
}

CyclotomicNumber spin_index_sum(const FixedPointData& d, int power) {
  return sum_over_points(d, power, [](long long a, long long b) { return spin_defect(a, b); });
}

Rational g_signature_of_data(const FixedPointData& d) { return as_rational(g_signature_sum(d)); }

DiracIndex dirac_coefficients(const FixedPointData& d, long long ind1) {
  // Character values of ind_G D on 1, g, g^2.
  const std::array<CyclotomicNumber, 3> character{
      CyclotomicNumber(ind1), spin_index_sum(d, 1), spin_index_sum(d, 2)};
  std::array<long long, 3> k{};
  for (int j = 0; j < 3; ++j) {
    CyclotomicNumber sum;
    for (int h = 0; h < 3; ++h) sum += character[h] * zeta_power(-j * h);
    const Rational kj = as_rational(sum) / 3;
    if (!is_integral(kj))
      throw Error("no consistent spin lift: m+-m- = " + std::to_string(d.difference()) +
                  " is not 6 (mod 9) (k" + std::to_string(j) + " = " + to_string(kj) + ")");
    k[j] = to_int64(to_integer(kj));
  }
  return {k[0], k[1], k[2]};
}

std::string to_string(const DiracIndex& k) {
  return "(" + std::to_string(k.k0) + ", " + std::to_string(k.k1) + ", " + std::to_string(k.k2) + ")";
}

}  // namespace pfk3
