#pragma once

#include <string>
#include <vector>

#include "partalg/rational.hpp"

namespace partalg {

/// Partition of {0, ..., ground_size-1} into disjoint nonempty blocks.
/// Canonical form: every block sorted ascending, blocks ordered by minimum.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int ground_size);
  // Restricted growth string: rgs[i] = block of element i, rgs[0] = 0,
  // rgs[i] <= 1 + max(rgs[0..i-1]).
  static SetPartition from_rgs(const std::vector<int>& rgs);

  int ground_size() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int element) const;

  bool operator==(const SetPartition& other) const {
    return ground_ == other.ground_ && blocks_ == other.blocks_;
  }
  // Ground size first, then lexicographic on the canonical block lists.
  bool operator<(const SetPartition& other) const {
    if (ground_ != other.ground_) return ground_ < other.ground_;
    return blocks_ < other.blocks_;
  }

 private:
  int ground_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> index_;  // element -> block index
};

/// All set partitions of {0..n-1}, sorted by the canonical block-list order.
std::vector<SetPartition> enumerate_set_partitions(int n);

BigInt bell(int n);              // Bell triangle recurrence
BigInt stirling2(int n, int k);  // second kind
BigInt binomial(int n, int k);
BigInt factorial(int n);

/// Weakly decreasing positive parts; the empty list is the partition of 0.
struct IntegerPartition {
  std::vector<int> parts;

  IntegerPartition() = default;
  IntegerPartition(std::initializer_list<int> p) : parts(p) {}
  explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {}

  int weight() const;
  int rows() const { return static_cast<int>(parts.size()); }
  bool valid() const;
  std::vector<int> conjugate() const;

  static IntegerPartition parse(const std::string& text);  // "[3,1,1]" / "[]"
  std::string to_string() const;

  bool operator==(const IntegerPartition&) const = default;
  bool operator<(const IntegerPartition& other) const {
    return parts < other.parts;
  }
};

/// Partitions of r in descending lexicographic order, e.g. (3),(2,1),(1,1,1).
std::vector<IntegerPartition> enumerate_integer_partitions(int r);

/// Number of standard Young tableaux, by the hook length formula.
BigInt standard_tableaux_count(const IntegerPartition& shape);

/// Bijection on {0..degree-1}; composition (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int degree, int i, int j);
  // "[2,1,3]" one-line (1-based) or "(1 2)(3 4)" cycles (1-based).
  static Permutation parse(const std::string& text, int degree = -1);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle type as a weakly decreasing integer partition of the degree.
  IntegerPartition cycle_type() const;
  /// Factorization into adjacent transpositions s_i = (i,i+1), 1-based i;
  /// the word applies right to left: sigma = s[0] o s[1] o ... o s[last]
  /// read as functions with s[last] applied first.
  std::vector<int> adjacent_word() const;

  std::string to_one_line_string() const;  // "[2,1,3]"

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const {
    return images_ < other.images_;
  }

 private:
  std::vector<int> images_;
};

}  // namespace partalg
