#include "partalg/repmat.hpp"

#include <stdexcept>

namespace partalg {

bool CellIndex::operator<(const CellIndex& other) const {
  if (n != other.n) return n < other.n;
  if (r != other.r) return r < other.r;
  return shape < other.shape;
}

BigInt cell_dimension(const CellIndex& index) {
  if (index.shape.weight() != index.r)
    throw std::invalid_argument("shape weight must equal the label count");
  return half_diagram_count(index.n, index.r) *
         standard_tableaux_count(index.shape);
}

CellModuleRealization::CellModuleRealization(CellIndex index,
                                             const Rational& delta)
    : index_(std::move(index)),
      delta_(delta),
      basis_(enumerate_half_diagrams(index_.n, index_.r)),
      specht_(index_.shape) {
  if (index_.shape.weight() != index_.r)
    throw std::invalid_argument("shape weight must equal the label count");
  for (size_t i = 0; i < basis_.size(); ++i)
    position_[basis_[i]] = static_cast<int>(i);
}

int CellModuleRealization::dimension() const {
  return static_cast<int>(basis_.size()) * specht_.dimension();
}

RatMatrix CellModuleRealization::action(const PartitionDiagram& diagram) const {
  const int f = specht_.dimension();
  RatMatrix m(dimension(), dimension());
  for (size_t col_block = 0; col_block < basis_.size(); ++col_block) {
    const auto moved = act(diagram, basis_[col_block]);
    if (!moved) continue;
    Rational scale = 1;
    for (int i = 0; i < moved->loop_exponent; ++i) scale *= delta_;
    const int row_block = position_.at(moved->result);
    const RatMatrix rho = specht_.permutation_matrix(moved->pi);
    for (int s = 0; s < f; ++s)
      for (int t = 0; t < f; ++t)
        if (rho.at(s, t) != 0)
          m.at(row_block * f + s, static_cast<int>(col_block) * f + t) =
              scale * rho.at(s, t);
  }
  return m;
}

std::vector<RatMatrix> CellModuleRealization::all_actions() const {
  std::vector<RatMatrix> out;
  for (const auto& d : diagram_basis(index_.n)) out.push_back(action(d));
  return out;
}

CellModuleRealization realize(const CellIndex& index, const Rational& delta) {
  return CellModuleRealization(index, delta);
}

}  // namespace partalg
