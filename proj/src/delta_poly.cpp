#include "partalg/delta_poly.hpp"

namespace partalg {

DeltaPolynomial::DeltaPolynomial(const Rational& constant) {
  set(0, constant);
}

DeltaPolynomial DeltaPolynomial::delta_power(int exponent, const Rational& coeff) {
  DeltaPolynomial p;
  p.set(exponent, coeff);
  return p;
}

void DeltaPolynomial::set(int exponent, Rational value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = std::move(value);
}

int DeltaPolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Rational DeltaPolynomial::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

DeltaPolynomial& DeltaPolynomial::operator+=(const DeltaPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

DeltaPolynomial& DeltaPolynomial::operator-=(const DeltaPolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

DeltaPolynomial DeltaPolynomial::operator+(const DeltaPolynomial& other) const {
  DeltaPolynomial out = *this;
  out += other;
  return out;
}

DeltaPolynomial DeltaPolynomial::operator-(const DeltaPolynomial& other) const {
  DeltaPolynomial out = *this;
  out -= other;
  return out;
}

DeltaPolynomial DeltaPolynomial::operator*(const DeltaPolynomial& other) const {
  DeltaPolynomial out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : other.coeffs_)
      out.set(e1 + e2, out.coefficient(e1 + e2) + c1 * c2);
  return out;
}

DeltaPolynomial DeltaPolynomial::operator*(const Rational& scalar) const {
  DeltaPolynomial out;
  if (scalar == 0) return out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = c * scalar;
  return out;
}

Rational DeltaPolynomial::evaluate(const Rational& delta) const {
  // Exponents are sorted ascending; Horner over the gaps.
  Rational acc = 0;
  int at = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (; at > it->first; --at) acc *= delta;
    acc += it->second;
  }
  for (; at > 0; --at) acc *= delta;
  return acc;
}

std::string DeltaPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = (mag == 1) && e != 0;
    if (!unit) out += format_rational(mag);
    if (e > 0) {
      if (!unit) out += ' ';
      out += 'd';
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace partalg
