#pragma once

#include <vector>

#include "partalg/rational.hpp"

namespace partalg {

// Dense matrix over exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator*(const Rational& scalar) const;
  bool operator==(const RatMatrix& other) const = default;

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b);

int matrix_rank(RatMatrix m);  // by value: elimination scratches the copy

// Columns form a basis of the right kernel {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);

// Dimension of the space of matrices X with second[i] * X == X * first[i]
// for every i; the two lists realize the same operators on the two spaces.
int intertwiner_dimension(const std::vector<RatMatrix>& first,
                          const std::vector<RatMatrix>& second);

}  // namespace partalg
