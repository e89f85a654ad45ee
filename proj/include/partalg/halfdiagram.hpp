#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/diagram.hpp"

namespace partalg {

// One-row diagram: a set partition of {1..n} together with a choice of
// labelled blocks. With r labelled blocks these span the rank-r cell space.
// Labels carry a standard order: the k-th label sits on the k-th labelled
// block when blocks are listed canonically (sorted by least element).
class HalfDiagram {
 public:
  // `labelled` lists positions into the supplied block list; the flags are
  // carried through canonicalization.
  HalfDiagram(int n, std::vector<std::vector<int>> blocks,
              const std::vector<int>& labelled);

  // Text form: blocks separated by '|', labelled blocks starred,
  // e.g. "*1,3|2,4|*5".
  static HalfDiagram parse(const std::string& text, int n);

  int n() const { return partition_.ground_size(); }
  int rank() const { return static_cast<int>(labelled_.size()); }
  const SetPartition& partition() const { return partition_; }
  const std::vector<std::vector<int>>& blocks() const {
    return partition_.blocks();
  }
  // Canonical indices of the labelled blocks, ascending.
  const std::vector<int>& labelled() const { return labelled_; }
  bool is_labelled(int block_index) const;
  // Standard position of a labelled block among the labels (0-based), or -1.
  int label_of_block(int block_index) const;

  std::string to_string() const;

  bool operator==(const HalfDiagram& other) const = default;
  bool operator<(const HalfDiagram& other) const;

 private:
  SetPartition partition_;
  std::vector<int> labelled_;
};

// Number of one-row diagrams on n dots with r labelled blocks.
BigInt half_diagram_count(int n, int r);

// All of them, in canonical order: by underlying partition, then by the
// labelled index set in lexicographic order.
std::vector<HalfDiagram> enumerate_half_diagrams(int n, int r);

// Distinguished generator of the rank-r cell space: labelled singletons
// {1}..{r-1} plus the labelled tail block {r..n}; for r == 0 the single
// unlabelled block {1..n}.
HalfDiagram v_zero(int n, int r);

// Every diagram factors uniquely as a top half, a bottom half, and a
// permutation of the labels: pi(j) = k when a block joins the j-th labelled
// top block to the k-th labelled bottom block (1-based positions; stored
// 0-based in Permutation).
struct StandardForm {
  HalfDiagram top;
  HalfDiagram bottom;
  Permutation pi;
};

StandardForm decompose(const PartitionDiagram& diagram);
PartitionDiagram recompose(const StandardForm& form);

// Action of a diagram on a one-row diagram: stack the diagram above it.
// A surviving component is labelled when it contains both a propagating
// diagram block and a labelled block of the operand. The action is zero
// (nullopt) unless all labels survive distinct; otherwise the operand's
// standard label j moves to standard label pi(j) of the result, and each
// component with no top-row dot contributes one loop factor.
struct ModuleAction {
  int loop_exponent = 0;
  HalfDiagram result;
  Permutation pi;
};

std::optional<ModuleAction> act(const PartitionDiagram& diagram,
                                const HalfDiagram& operand);

}  // namespace partalg
