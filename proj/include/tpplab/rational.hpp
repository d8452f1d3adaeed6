#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace tpplab {

// Exact nonnegative rational. Ratio comparisons against square roots are
// done by squaring in integers, never through floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  static Rational whole(std::int64_t n) { return Rational(n, 1); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  bool is_integer() const { return den == 1; }

  // this^2 < m, exactly.
  bool square_less_than(std::int64_t m) const { return num * num < m * den * den; }
  // this^2 <= m, exactly.
  bool square_at_most(std::int64_t m) const { return num * num <= m * den * den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace tpplab
