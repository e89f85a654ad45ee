#pragma once

#include <map>
#include <string>

#include "partalg/rational.hpp"

namespace partalg {

// Polynomial in the loop parameter with exact rational coefficients.
// Stored sparsely; zero coefficients are never kept.
class DeltaPolynomial {
 public:
  DeltaPolynomial() = default;
  explicit DeltaPolynomial(const Rational& constant);

  static DeltaPolynomial delta_power(int exponent, const Rational& coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int exponent) const;

  DeltaPolynomial& operator+=(const DeltaPolynomial& other);
  DeltaPolynomial& operator-=(const DeltaPolynomial& other);
  DeltaPolynomial operator+(const DeltaPolynomial& other) const;
  DeltaPolynomial operator-(const DeltaPolynomial& other) const;
  DeltaPolynomial operator*(const DeltaPolynomial& other) const;
  DeltaPolynomial operator*(const Rational& scalar) const;
  bool operator==(const DeltaPolynomial& other) const = default;

  Rational evaluate(const Rational& delta) const;
  std::string to_string() const;  // e.g. "d^2 - 2/3 d + 1"

 private:
  std::map<int, Rational> coeffs_;
  void set(int exponent, Rational value);
};

}  // namespace partalg
