#include "partalg/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace partalg {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

std::string format_bigint(const BigInt& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace partalg
