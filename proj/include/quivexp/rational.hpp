#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace quivexp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "P/Q" or "P" with optional leading sign on P; Q must be positive.
// Decimal notation is rejected so that every input stays exact.
Rational parse_rational(std::string_view text);

// "P/Q", or "P" when the denominator is 1.
std::string to_string(const Rational& value);

inline BigInt numerator_of(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

inline BigInt denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

}  // namespace quivexp
