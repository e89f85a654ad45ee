#include "partalg/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace partalg {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("shape mismatch in addition");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("shape mismatch in subtraction");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - other.data_[i];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("shape mismatch in product");
  RatMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& w = other.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator*(const Rational& scalar) const {
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Rational RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const Rational& v : data_)
    if (v != 0) return false;
  return true;
}

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          out.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return out;
}

namespace {

// Row echelon pass; returns pivot columns. The matrix is modified in place.
std::vector<int> echelon(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int lead = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        lead = i;
        break;
      }
    if (lead < 0) continue;
    if (lead != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(lead, j), m.at(row, j));
    const Rational inv = Rational(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RatMatrix m) {
  return static_cast<int>(echelon(m).size());
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix work = m;
  const std::vector<int> pivots = echelon(work);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int col = 0; col < m.cols(); ++col) {
      if (p < pivots.size() && pivots[p] == col)
        ++p;
      else
        free_cols.push_back(col);
    }
  }
  RatMatrix basis(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], static_cast<int>(k)) = 1;
    for (size_t p = 0; p < pivots.size(); ++p)
      basis.at(pivots[p], static_cast<int>(k)) =
          -work.at(static_cast<int>(p), free_cols[k]);
  }
  return basis;
}

int intertwiner_dimension(const std::vector<RatMatrix>& first,
                          const std::vector<RatMatrix>& second) {
  if (first.size() != second.size())
    throw std::invalid_argument("operator lists of different length");
  if (first.empty()) throw std::invalid_argument("no operators supplied");
  const int d1 = first.front().cols();
  const int d2 = second.front().cols();
  // Unknown X is d2 x d1; vec stacks columns, so vec(A X) = (I (x) A) vec X
  // and vec(X B) = (B^T (x) I) vec X. Solutions are tracked incrementally:
  // after each constraint the candidate space's basis is narrowed.
  RatMatrix candidates = RatMatrix::identity(d1 * d2);
  for (size_t g = 0; g < first.size(); ++g) {
    if (candidates.cols() == 0) break;
    const RatMatrix constraint =
        kronecker_product(RatMatrix::identity(d1), second[g]) -
        kronecker_product(first[g].transpose(), RatMatrix::identity(d2));
    candidates = candidates * nullspace(constraint * candidates);
  }
  return candidates.cols();
}

}  // namespace partalg
