#include "quivexp/surd.hpp"

#include "quivexp/errors.hpp"

#include <cmath>
#include <cstdint>
#include <regex>
#include <stdexcept>

namespace quivexp {

namespace mp = boost::multiprecision;

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
  std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw InputError("malformed rational '" + s + "' (expected P/Q or an integer)");
  }
  std::string head = match[1].str();
  if (head.front() == '+') head.erase(0, 1);
  BigInt num(head);
  BigInt den = match[2].matched ? BigInt(match[2].str()) : BigInt(1);
  if (den == 0) {
    throw InputError("zero denominator in '" + s + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  BigInt den = denominator_of(value);
  if (den == 1) {
    return numerator_of(value).str();
  }
  return numerator_of(value).str() + "/" + den.str();
}

BigInt floor_of(const Rational& value) {
  BigInt num = numerator_of(value);
  BigInt den = denominator_of(value);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) {
    quot -= 1;
  }
  return quot;
}

BigInt ceil_of(const Rational& value) { return -floor_of(-value); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) {
    throw std::domain_error("isqrt of a negative number");
  }
  return mp::sqrt(n);
}

std::pair<BigInt, BigInt> split_square_factor(const BigInt& n) {
  if (n < 0) {
    throw std::domain_error("negative radicand");
  }
  if (n == 0) {
    return {BigInt(1), BigInt(0)};
  }
  if (n > kMaxRadicand) {
    throw InputError("radicand " + n.str() + " exceeds the supported bound");
  }
  auto rem = n.convert_to<std::uint64_t>();
  std::uint64_t square = 1;
  std::uint64_t free_part = 1;
  for (std::uint64_t i = 2; i * i <= rem; ++i) {
    if (rem % i != 0) {
      continue;
    }
    int exponent = 0;
    while (rem % i == 0) {
      rem /= i;
      ++exponent;
    }
    for (int k = 0; k < exponent / 2; ++k) {
      square *= i;
    }
    if (exponent % 2 == 1) {
      free_part *= i;
    }
  }
  free_part *= rem;
  return {BigInt(square), BigInt(free_part)};
}

namespace {

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Radicand shared by two operands, or domain_error when they differ.
BigInt common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) {
    return b.n();
  }
  if (b.is_rational() || a.n() == b.n()) {
    return a.n();
  }
  throw std::domain_error("surds with radicands " + a.n().str() + " and " +
                          b.n().str() + " are not in a common quadratic field");
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt p, BigInt q, BigInt n, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), n_(std::move(n)), r_(std::move(r)) {
  normalize();
}

void QuadraticSurd::normalize() {
  if (r_ == 0) {
    throw std::domain_error("zero denominator in quadratic surd");
  }
  if (n_ < 0) {
    throw std::domain_error("negative radicand in quadratic surd");
  }
  if (q_ == 0 || n_ == 0) {
    q_ = 0;
    n_ = 0;
  } else {
    auto [square, free_part] = split_square_factor(n_);
    q_ *= square;
    n_ = free_part;
    if (n_ == 1) {
      p_ += q_;
      q_ = 0;
      n_ = 0;
    }
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = mp::gcd(mp::gcd(mp::abs(p_), mp::abs(q_)), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticSurd QuadraticSurd::from_rational(const Rational& value) {
  return QuadraticSurd(numerator_of(value), 0, 0, denominator_of(value));
}

QuadraticSurd QuadraticSurd::from_parts(const Rational& a, const Rational& b,
                                        const Rational& radicand) {
  if (radicand < 0) {
    throw std::domain_error("negative radicand in quadratic surd");
  }
  // sqrt(N/D) = sqrt(N*D) / D
  BigInt rad_num = numerator_of(radicand);
  BigInt rad_den = denominator_of(radicand);
  Rational coeff = b / Rational(rad_den);
  BigInt a_den = denominator_of(a);
  BigInt c_den = denominator_of(coeff);
  BigInt common = mp::lcm(a_den, c_den);
  return QuadraticSurd(numerator_of(a) * (common / a_den),
                       numerator_of(coeff) * (common / c_den),
                       rad_num * rad_den, common);
}

Rational QuadraticSurd::rational_part() const { return Rational(p_, r_); }

Rational QuadraticSurd::radical_coefficient() const { return Rational(q_, r_); }

int QuadraticSurd::sign() const {
  int sp = sign_of(p_);
  int sq = sign_of(q_);
  if (sq == 0) {
    return sp;
  }
  if (sp == 0 || sp == sq) {
    return sq;
  }
  // Opposite signs: the term of larger magnitude wins. n is square-free and
  // q != 0, so p^2 == q^2 n cannot happen.
  BigInt lhs = p_ * p_;
  BigInt rhs = q_ * q_ * n_;
  return lhs > rhs ? sp : sq;
}

double QuadraticSurd::to_double() const {
  auto ld = [](const BigInt& x) { return x.convert_to<long double>(); };
  if (q_ == 0) {
    return static_cast<double>(ld(p_) / ld(r_));
  }
  long double root = std::sqrt(ld(n_));
  if (sign_of(p_) * sign_of(q_) >= 0) {
    return static_cast<double>((ld(p_) + ld(q_) * root) / ld(r_));
  }
  // Rationalize to avoid cancellation: p + q√n = (p² - q²n) / (p - q√n).
  BigInt norm = p_ * p_ - q_ * q_ * n_;
  return static_cast<double>(ld(norm) / (ld(r_) * (ld(p_) - ld(q_) * root)));
}

std::string QuadraticSurd::to_decimal(int significant) const {
  if (significant < 1) {
    throw std::invalid_argument("significant digits must be positive");
  }
  int s = sign();
  int exponent = 0;
  if (s != 0) {
    exponent = static_cast<int>(std::floor(std::log10(std::fabs(to_double()))));
  }
  int decimals = std::max(0, significant - 1 - exponent);

  // floor(|v| * 10^(decimals+1)) exactly, then round on the extra digit.
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(decimals + 1));
  BigInt a = s * p_ * scale;
  BigInt b = s * q_ * scale;
  BigInt root = isqrt(b * b * n_);
  BigInt radical_floor;
  if (b >= 0) {
    radical_floor = root;
  } else {
    radical_floor = -root;
    if (root * root != b * b * n_) radical_floor -= 1;
  }
  BigInt scaled = (a + radical_floor) / r_;
  BigInt rounded = (scaled + 5) / 10;

  std::string digits = rounded.str();
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals) {
      digits.insert(0, decimals + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - decimals, ".");
  }
  return (s < 0 ? "-" : "") + digits;
}

std::string QuadraticSurd::to_string() const {
  if (q_ == 0) {
    return quivexp::to_string(rational_part());
  }
  std::string radical = "sqrt(" + n_.str() + ")";
  BigInt mag = mp::abs(q_);
  if (mag != 1) {
    radical = mag.str() + "*" + radical;
  }
  std::string body;
  if (p_ != 0) {
    body = p_.str() + (q_ < 0 ? "-" : "+") + radical;
  } else {
    body = (q_ < 0 ? "-" : "") + radical;
  }
  if (r_ == 1) {
    return body;
  }
  return "(" + body + ")/" + r_.str();
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-p_, -q_, n_, r_);
}

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  BigInt n = common_radicand(a, b);
  return QuadraticSurd(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, n,
                       a.r_ * b.r_);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a + (-b);
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  BigInt n = common_radicand(a, b);
  return QuadraticSurd(a.p_ * b.p_ + a.q_ * b.q_ * n,
                       a.p_ * b.q_ + a.q_ * b.p_, n, a.r_ * b.r_);
}

QuadraticSurd operator/(const QuadraticSurd& a, const Rational& b) {
  if (b == 0) {
    throw std::domain_error("division of quadratic surd by zero");
  }
  BigInt num = numerator_of(b);
  BigInt den = denominator_of(b);
  return QuadraticSurd(a.p_ * den, a.q_ * den, a.n_, a.r_ * num);
}

namespace {

std::strong_ordering ordering_of(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  return ordering_of((a - b).sign());
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const Rational& b) {
  return ordering_of((a - QuadraticSurd::from_rational(b)).sign());
}

}  // namespace quivexp
