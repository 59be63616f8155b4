#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace redword {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b" or an integer "a". Decimal and exponent forms are rejected
/// so that every probability entering the library is exact.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace redword
