#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nckit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Always "num/den" with den > 0, e.g. "1/1", "-2/3".
std::string rational_str(const Rational& x);

// Accepts "n", "n/d" and surrounding blanks.
Rational parse_rational(std::string_view text);

}  // namespace nckit
