#pragma once

#include <map>
#include <vector>

#include "partalg/halfdiagram.hpp"
#include "partalg/ratmat.hpp"
#include "partalg/specht.hpp"

namespace partalg {

// Cell module label: strand count, number of labels, and a shape of that
// weight twisting the label permutations.
struct CellIndex {
  int n = 0;
  int r = 0;
  IntegerPartition shape;

  bool operator==(const CellIndex&) const = default;
  bool operator<(const CellIndex& other) const;
};

BigInt cell_dimension(const CellIndex& index);

// Explicit matrices for the cell module at a fixed rational value of the
// loop parameter. Basis vectors are pairs (one-row diagram, tableau basis
// vector), enumerated row-major in canonical order.
class CellModuleRealization {
 public:
  CellModuleRealization(CellIndex index, const Rational& delta);

  const CellIndex& index() const { return index_; }
  const Rational& delta() const { return delta_; }
  int dimension() const;
  const std::vector<HalfDiagram>& half_basis() const { return basis_; }

  RatMatrix action(const PartitionDiagram& diagram) const;
  // One matrix per basis diagram of the algebra, in canonical diagram order.
  std::vector<RatMatrix> all_actions() const;

 private:
  CellIndex index_;
  Rational delta_;
  std::vector<HalfDiagram> basis_;
  std::map<HalfDiagram, int> position_;
  SpechtRealization specht_;
};

CellModuleRealization realize(const CellIndex& index, const Rational& delta);

}  // namespace partalg
