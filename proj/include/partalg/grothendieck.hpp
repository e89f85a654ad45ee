#pragma once

#include <map>
#include <string>
#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/rational.hpp"

namespace partalg {

// Class of a cell module in the stable product ring: the label count and a
// shape of that weight. The strand count plays no role once both factors
// are large enough to host every profile.
struct ClassLabel {
  int r = 0;
  IntegerPartition shape;

  bool operator==(const ClassLabel&) const = default;
  bool operator<(const ClassLabel& other) const {
    return r != other.r ? r < other.r : shape < other.shape;
  }
  std::string to_string() const {
    return "(" + std::to_string(r) + "," + shape.to_string() + ")";
  }
};

// Expansion of the product [x][y] over classes, computed tuple by tuple by
// explicit character sums over quadruples of cycle types. Every partial sum
// is checked to be integral.
std::map<ClassLabel, BigInt> structure_constants(const ClassLabel& x,
                                                 const ClassLabel& y);

// Integer combination of classes.
class GrothendieckElement {
 public:
  GrothendieckElement() = default;
  explicit GrothendieckElement(const ClassLabel& label);

  const std::map<ClassLabel, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ClassLabel& label, const BigInt& coeff);
  GrothendieckElement& operator+=(const GrothendieckElement& other);
  GrothendieckElement operator*(const GrothendieckElement& other) const;
  bool operator==(const GrothendieckElement&) const = default;

 private:
  std::map<ClassLabel, BigInt> terms_;
};

struct RingTableRow {
  ClassLabel x;
  ClassLabel y;
  std::map<ClassLabel, BigInt> product;
};

// Products of all class pairs with combined label count at most max_total.
std::vector<RingTableRow> ring_table(int max_total);

}  // namespace partalg
