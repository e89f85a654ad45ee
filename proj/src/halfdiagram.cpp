#include "partalg/halfdiagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "partalg/detail/union_find.hpp"

namespace partalg {

HalfDiagram::HalfDiagram(int n, std::vector<std::vector<int>> blocks,
                         const std::vector<int>& labelled) {
  std::vector<int> anchors;  // least element of each labelled input block
  anchors.reserve(labelled.size());
  for (int pos : labelled) {
    if (pos < 0 || pos >= static_cast<int>(blocks.size()))
      throw std::invalid_argument("labelled position out of range");
    anchors.push_back(
        *std::min_element(blocks[pos].begin(), blocks[pos].end()));
  }
  partition_ = SetPartition(n, std::move(blocks));
  for (int a : anchors) labelled_.push_back(partition_.block_of(a));
  std::sort(labelled_.begin(), labelled_.end());
  if (std::adjacent_find(labelled_.begin(), labelled_.end()) != labelled_.end())
    throw std::invalid_argument("block labelled twice");
}

HalfDiagram HalfDiagram::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> labelled;
  std::vector<int> current;
  bool starred = false;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("half diagram parse error at position " +
                                std::to_string(pos) + ": " + what);
  };
  auto flush_block = [&] {
    if (current.empty()) fail("empty block");
    if (starred) labelled.push_back(static_cast<int>(blocks.size()));
    blocks.push_back(current);
    current.clear();
    starred = false;
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    if (c == '|') {
      flush_block();
      ++pos;
      continue;
    }
    if (c == '*') {
      if (!current.empty()) fail("label marker inside a block");
      starred = true;
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(std::string("unexpected character '") + c + "'");
    size_t end = pos;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    const int label = std::stoi(text.substr(pos, end - pos));
    if (label < 1 || label > n) fail("dot label outside 1.." + std::to_string(n));
    current.push_back(label - 1);
    pos = end;
  }
  flush_block();
  return HalfDiagram(n, std::move(blocks), labelled);
}

bool HalfDiagram::is_labelled(int block_index) const {
  return std::binary_search(labelled_.begin(), labelled_.end(), block_index);
}

int HalfDiagram::label_of_block(int block_index) const {
  auto it = std::lower_bound(labelled_.begin(), labelled_.end(), block_index);
  if (it == labelled_.end() || *it != block_index) return -1;
  return static_cast<int>(it - labelled_.begin());
}

bool HalfDiagram::operator<(const HalfDiagram& other) const {
  if (partition_ < other.partition_) return true;
  if (other.partition_ < partition_) return false;
  return labelled_ < other.labelled_;
}

std::string HalfDiagram::to_string() const {
  std::string out;
  for (int b = 0; b < partition_.block_count(); ++b) {
    if (b) out += '|';
    if (is_labelled(b)) out += '*';
    const auto& block = blocks()[b];
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i] + 1);
    }
  }
  return out;
}

BigInt half_diagram_count(int n, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative argument");
  BigInt total = 0;
  for (int k = r; k <= n; ++k) total += stirling2(n, k) * binomial(k, r);
  if (n == 0 && r == 0) total = 1;
  return total;
}

std::vector<HalfDiagram> enumerate_half_diagrams(int n, int r) {
  std::vector<HalfDiagram> out;
  for (const auto& partition : enumerate_set_partitions(n)) {
    const int k = partition.block_count();
    if (k < r) continue;
    // Walk r-subsets of block indices in lexicographic order.
    std::vector<int> choice(r);
    for (int i = 0; i < r; ++i) choice[i] = i;
    while (true) {
      out.push_back(HalfDiagram(n, partition.blocks(), choice));
      int i = r - 1;
      while (i >= 0 && choice[i] == k - r + i) --i;
      if (i < 0) break;
      ++choice[i];
      for (int j = i + 1; j < r; ++j) choice[j] = choice[j - 1] + 1;
    }
  }
  return out;
}

HalfDiagram v_zero(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("rank outside [0, n]");
  std::vector<std::vector<int>> blocks;
  std::vector<int> labelled;
  if (r == 0) {
    if (n > 0) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      blocks.push_back(std::move(all));
    }
  } else {
    for (int i = 0; i + 1 < r; ++i) blocks.push_back({i});
    std::vector<int> tail;
    for (int i = r - 1; i < n; ++i) tail.push_back(i);
    blocks.push_back(std::move(tail));
    for (int i = 0; i < r; ++i) labelled.push_back(i);
  }
  return HalfDiagram(n, std::move(blocks), labelled);
}

StandardForm decompose(const PartitionDiagram& diagram) {
  const int n = diagram.n();
  std::vector<std::vector<int>> top_blocks, bottom_blocks;
  std::vector<int> top_labelled, bottom_labelled;
  std::vector<std::pair<int, int>> links;  // (top anchor, bottom anchor)
  for (size_t b = 0; b < diagram.blocks().size(); ++b) {
    const auto& block = diagram.blocks()[b];
    std::vector<int> top, bottom;
    for (int e : block)
      (e < n ? top : bottom).push_back(e < n ? e : e - n);
    const bool propagates = !top.empty() && !bottom.empty();
    if (!top.empty()) {
      if (propagates)
        top_labelled.push_back(static_cast<int>(top_blocks.size()));
      top_blocks.push_back(top);
    }
    if (!bottom.empty()) {
      if (propagates)
        bottom_labelled.push_back(static_cast<int>(bottom_blocks.size()));
      bottom_blocks.push_back(bottom);
    }
    if (propagates) links.emplace_back(top.front(), bottom.front());
  }
  HalfDiagram top(n, std::move(top_blocks), top_labelled);
  HalfDiagram bottom(n, std::move(bottom_blocks), bottom_labelled);
  std::vector<int> images(links.size());
  for (const auto& [ta, ba] : links) {
    const int j = top.label_of_block(top.partition().block_of(ta));
    const int k = bottom.label_of_block(bottom.partition().block_of(ba));
    images[j] = k;
  }
  return {std::move(top), std::move(bottom), Permutation(std::move(images))};
}

PartitionDiagram recompose(const StandardForm& form) {
  const int n = form.top.n();
  if (form.bottom.n() != n)
    throw std::invalid_argument("half diagrams on different dot counts");
  const int r = form.top.rank();
  if (form.bottom.rank() != r || form.pi.degree() != r)
    throw std::invalid_argument("label counts disagree");
  std::vector<std::vector<int>> blocks;
  for (int b = 0; b < form.top.partition().block_count(); ++b)
    if (!form.top.is_labelled(b)) blocks.push_back(form.top.blocks()[b]);
  for (int b = 0; b < form.bottom.partition().block_count(); ++b) {
    if (form.bottom.is_labelled(b)) continue;
    std::vector<int> shifted;
    for (int e : form.bottom.blocks()[b]) shifted.push_back(e + n);
    blocks.push_back(std::move(shifted));
  }
  for (int j = 0; j < r; ++j) {
    std::vector<int> merged = form.top.blocks()[form.top.labelled()[j]];
    for (int e : form.bottom.blocks()[form.bottom.labelled()[form.pi(j)]])
      merged.push_back(e + n);
    blocks.push_back(std::move(merged));
  }
  return PartitionDiagram(n, std::move(blocks));
}

std::optional<ModuleAction> act(const PartitionDiagram& diagram,
                                const HalfDiagram& operand) {
  const int n = diagram.n();
  if (operand.n() != n)
    throw std::invalid_argument("acting on the wrong number of dots");
  // Dots 0..n-1: outer top row; dots n..2n-1: contracted middle row where
  // the diagram's bottom meets the operand.
  detail::UnionFind uf(2 * n);
  for (const auto& block : diagram.blocks())
    for (size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
  for (const auto& block : operand.blocks())
    for (size_t i = 1; i < block.size(); ++i)
      uf.unite(block[0] + n, block[i] + n);

  std::map<int, std::vector<int>> top_dots;
  for (int i = 0; i < n; ++i) top_dots[uf.find(i)].push_back(i);
  std::map<int, char> has_propagating;
  for (size_t b = 0; b < diagram.blocks().size(); ++b)
    if (diagram.block_propagates(static_cast<int>(b)))
      has_propagating[uf.find(diagram.blocks()[b].front())] = 1;
  std::map<int, std::vector<int>> label_roots;  // root -> operand labels
  for (int a = 0; a < operand.rank(); ++a) {
    const int anchor = operand.blocks()[operand.labelled()[a]].front();
    label_roots[uf.find(anchor + n)].push_back(a);
  }

  std::vector<std::vector<int>> blocks;
  std::vector<int> labelled;
  std::vector<std::pair<int, int>> moved;  // (operand label, block position)
  for (auto& [root, dots] : top_dots) {
    const bool has_label = label_roots.count(root) > 0;
    if (has_label && has_propagating.count(root)) {
      if (label_roots[root].size() > 1) return std::nullopt;  // labels merged
      labelled.push_back(static_cast<int>(blocks.size()));
      moved.emplace_back(label_roots[root].front(),
                         static_cast<int>(blocks.size()));
    } else if (has_label) {
      return std::nullopt;  // label lost its propagating support
    }
    blocks.push_back(std::move(dots));
  }
  for (const auto& [root, labels] : label_roots)
    if (!top_dots.count(root)) return std::nullopt;  // label swallowed

  int loops = 0;
  for (int i = n; i < 2 * n; ++i)
    if (uf.find(i) == i && !top_dots.count(i)) ++loops;

  HalfDiagram result(n, blocks, labelled);
  std::vector<int> images(operand.rank());
  for (const auto& [a, position] : moved) {
    const int canonical = result.partition().block_of(blocks[position].front());
    images[a] = result.label_of_block(canonical);
  }
  return ModuleAction{loops, std::move(result), Permutation(std::move(images))};
}

}  // namespace partalg
