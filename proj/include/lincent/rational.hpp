#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace lincent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational from an integer pair; throws std::invalid_argument on q == 0.
Rational rat(long long p, long long q = 1);

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string rational_str(const Rational& r);

// Accepts "p", "p/q", or a finite decimal such as "-0.25"; throws
// std::invalid_argument on anything else (including q == 0).
Rational parse_rational(std::string_view text);

BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace lincent
