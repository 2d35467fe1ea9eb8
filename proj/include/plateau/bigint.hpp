#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace plateau {

// Signed arbitrary-precision integer. Counts are always nonnegative values of
// this type; polynomial coefficients may be negative.
using BigInt = boost::multiprecision::cpp_int;
using Count = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q);

}  // namespace plateau
