#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace partalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: lowest terms, "/q" omitted when q == 1.
std::string format_rational(const Rational& value);

std::string format_bigint(const BigInt& value);

}  // namespace partalg
