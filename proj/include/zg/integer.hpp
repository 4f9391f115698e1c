#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

/// Narrowing conversion that throws std::overflow_error when x does not fit.
std::int64_t to_int64(const Integer& x);

Integer ipow(const Integer& base, unsigned exponent);
/// p^e for any integer e (negative exponents give 1/p^{-e}).
Rational rpow(const Integer& p, long e);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace zg
