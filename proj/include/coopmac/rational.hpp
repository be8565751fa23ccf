#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace coopmac {

/// Exact rational scalar used throughout the performance evaluation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/8", "-5/16", "0.25" or "2" exactly. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace coopmac
