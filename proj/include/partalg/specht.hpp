#pragma once

#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/ratmat.hpp"

namespace partalg {

// A standard tableau of shape lambda |- r: rows of the shape filled with
// 1..r, increasing along rows and down columns.
using Tableau = std::vector<std::vector<int>>;

// All standard tableaux of the shape, sorted by row-reading word.
std::vector<Tableau> standard_tableaux(const IntegerPartition& shape);

// Irreducible seminormal realization of the symmetric group on the weight
// of the shape, over exact rationals. Generator matrices follow Young's
// orthogonal-form pattern with rational axial distances: for a tableau pair
// swapped by s_i with axial distance d > 0 the action is
//   s_i v0 = (1/d) v0 + (1 - 1/d^2) v1,   s_i v1 = v0 - (1/d) v1,
// and +1 / -1 on tableaux fixed with i, i+1 in the same row / column.
class SpechtRealization {
 public:
  explicit SpechtRealization(const IntegerPartition& shape);

  const IntegerPartition& shape() const { return shape_; }
  int dimension() const { return dimension_; }
  int degree() const { return degree_; }
  // Matrix of the adjacent transposition s_i, 1 <= i < degree.
  const RatMatrix& generator(int i) const { return generators_.at(i - 1); }
  RatMatrix permutation_matrix(const Permutation& sigma) const;
  Rational character(const Permutation& sigma) const;

 private:
  IntegerPartition shape_;
  int degree_ = 0;
  int dimension_ = 1;
  std::vector<RatMatrix> generators_;
};

SpechtRealization specht_realization(const IntegerPartition& shape);

// Irreducible character value by iterated border-strip removal; memoized.
BigInt symmetric_group_character(const IntegerPartition& shape,
                                 const IntegerPartition& cycle_type);

// Order of the centralizer of a permutation with the given cycle type.
BigInt centralizer_order(const IntegerPartition& cycle_type);

// Concatenation of cycle types (disjoint union of the permutations).
IntegerPartition join_cycle_types(const IntegerPartition& a,
                                  const IntegerPartition& b);

// Littlewood-Richardson coefficient c^outer_{inner1, inner2}, counted by
// enumerating ballot-word skew fillings; memoized and thread-safe.
BigInt lr_coefficient(const IntegerPartition& outer,
                      const IntegerPartition& inner1,
                      const IntegerPartition& inner2);

// Kronecker coefficient g(a, b, c) via the character inner product.
BigInt kronecker_coefficient(const IntegerPartition& a,
                             const IntegerPartition& b,
                             const IntegerPartition& c);

// Shapes reachable by removing one corner cell (restriction to the
// next-smaller symmetric group; each occurs once).
std::vector<IntegerPartition> remove_one_box(const IntegerPartition& shape);

// Multiplicity of S^outer after inducing S^inner against the full group
// algebra of the complementary factor: sum over tau of f^tau * c^outer_{inner, tau}.
BigInt one_sided_induction(const IntegerPartition& outer,
                           const IntegerPartition& inner);

}  // namespace partalg
