#pragma once

#include "quivexp/rational.hpp"

#include <compare>
#include <string>

namespace quivexp {

// Exact real number (p + q*sqrt(n)) / r.
//
// Values are kept normalized: n is square-free (n == 0 whenever the value is
// rational), r > 0, and gcd(p, q, r) == 1. Two normalized surds are equal iff
// their four components agree.
//
// Ordering is exact. A surd compares against any rational and against any
// surd sharing its radicand; comparing two genuinely different radicands
// throws std::domain_error.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(BigInt p, BigInt q, BigInt n, BigInt r);

  static QuadraticSurd from_rational(const Rational& value);
  // a + b * sqrt(radicand), radicand >= 0.
  static QuadraticSurd from_parts(const Rational& a, const Rational& b,
                                  const Rational& radicand);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& n() const { return n_; }
  const BigInt& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  Rational rational_part() const;
  // Coefficient of sqrt(n), i.e. q / r.
  Rational radical_coefficient() const;

  // -1, 0 or +1.
  int sign() const;

  double to_double() const;
  // Fixed-point decimal with `significant` significant digits, rounded half
  // away from zero from the exact value.
  std::string to_decimal(int significant) const;
  // Human-readable form such as "(5-sqrt(5))/2" or "2+sqrt(3)".
  std::string to_string() const;

  QuadraticSurd operator-() const;

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const Rational& b);

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  friend std::strong_ordering operator<=>(const QuadraticSurd& a,
                                          const QuadraticSurd& b);
  friend std::strong_ordering operator<=>(const QuadraticSurd& a,
                                          const Rational& b);
  friend bool operator==(const QuadraticSurd& a, const Rational& b) {
    return a.is_rational() && a.rational_part() == b;
  }

 private:
  void normalize();

  BigInt p_ = 0;
  BigInt q_ = 0;
  BigInt n_ = 0;
  BigInt r_ = 1;
};

// Largest k with k*k <= n, for n >= 0.
BigInt isqrt(const BigInt& n);

// Splits n >= 0 into (s, f) with n == s*s*f and f square-free. Radicands above
// kMaxRadicand are rejected since the factorization is by trial division.
std::pair<BigInt, BigInt> split_square_factor(const BigInt& n);

inline constexpr long long kMaxRadicand = 100'000'000'000'000LL;

}  // namespace quivexp
