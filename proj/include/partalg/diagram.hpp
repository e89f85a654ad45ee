#pragma once

#include <map>
#include <string>
#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/delta_poly.hpp"

namespace partalg {

// Basis diagram of the partition algebra on n strands: a set partition of the
// 2n dots {1..n, 1'..n'}. Internally dot i (1-based, top row) is encoded as
// i-1 and dot i' (bottom row) as n+i-1.
class PartitionDiagram {
 public:
  PartitionDiagram(int n, std::vector<std::vector<int>> blocks);

  static PartitionDiagram identity(int n);
  static PartitionDiagram from_permutation(const Permutation& sigma);
  // For r >= 1: the pairs {i,i'} for i < r plus one block {r..n, r'..n'}.
  // For r == 0: the single block of all 2n dots. Idempotent in either case.
  static PartitionDiagram e_idempotent(int n, int r);
  // Text form: blocks separated by '|', dots by ',', bottom dots primed,
  // e.g. "1,2',3'|2|3,5'|4,5,6,4',6'".
  static PartitionDiagram parse(const std::string& text, int n);

  int n() const { return half_; }
  const SetPartition& partition() const { return partition_; }
  const std::vector<std::vector<int>>& blocks() const {
    return partition_.blocks();
  }
  bool block_propagates(int block_index) const;
  int propagating_number() const;

  // Reflects the diagram across the horizontal axis (i <-> i').
  PartitionDiagram involution() const;

  std::string to_string() const;

  bool operator==(const PartitionDiagram& other) const = default;
  bool operator<(const PartitionDiagram& other) const {
    return partition_ < other.partition_;
  }

 private:
  int half_ = 0;
  SetPartition partition_;
};

// Product of two basis diagrams: `above` is stacked on top of `below`, the
// shared middle row is contracted, and each component that ends up with no
// dot in the outer rows contributes one loop factor.
struct Composition {
  PartitionDiagram diagram;
  int delta_exponent = 0;
};

Composition compose_diagrams(const PartitionDiagram& above,
                             const PartitionDiagram& below);

// Side-by-side placement: an m-strand diagram next to an n-strand diagram,
// giving an (m+n)-strand diagram with the right factor's dots shifted by m.
PartitionDiagram juxtapose(const PartitionDiagram& left,
                           const PartitionDiagram& right);

// All diagrams on n strands in canonical (sorted) order; Bell(2n) of them.
std::vector<PartitionDiagram> diagram_basis(int n);

// Finite linear combination of basis diagrams with polynomial coefficients
// in the loop parameter.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : half_(n) {}
  explicit AlgebraElement(const PartitionDiagram& d);

  int n() const { return half_; }
  const std::map<PartitionDiagram, DeltaPolynomial>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PartitionDiagram& d, const DeltaPolynomial& coeff);
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator*(const AlgebraElement& other) const;
  AlgebraElement operator*(const DeltaPolynomial& scalar) const;
  bool operator==(const AlgebraElement& other) const = default;

 private:
  int half_ = 0;
  std::map<PartitionDiagram, DeltaPolynomial> terms_;
};

}  // namespace partalg
