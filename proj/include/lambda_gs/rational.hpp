#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambda_gs {

using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-0.25", "1.5e-3" or "7/3" exactly. Decimal strings map to
// digits / 10^places, so "0.1" is 1/10 and never a binary approximation.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

// Shortest exact decimal when the denominator divides a power of ten,
// otherwise the "p/q" form.
std::string to_decimal_string(const Rational& value);

}  // namespace lambda_gs
