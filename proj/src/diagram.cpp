#include "partalg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "partalg/detail/union_find.hpp"

namespace partalg {

PartitionDiagram::PartitionDiagram(int n, std::vector<std::vector<int>> blocks)
    : half_(n), partition_(2 * n, std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("negative strand count");
}

PartitionDiagram PartitionDiagram::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return PartitionDiagram(n, std::move(blocks));
}

PartitionDiagram PartitionDiagram::from_permutation(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + sigma(i)});
  return PartitionDiagram(n, std::move(blocks));
}

PartitionDiagram PartitionDiagram::e_idempotent(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("rank outside [0, n]");
  std::vector<std::vector<int>> blocks;
  if (r == 0) {
    std::vector<int> all(2 * n);
    for (int i = 0; i < 2 * n; ++i) all[i] = i;
    blocks.push_back(std::move(all));
  } else {
    for (int i = 0; i < r - 1; ++i) blocks.push_back({i, n + i});
    std::vector<int> tail;
    for (int i = r - 1; i < n; ++i) tail.push_back(i);
    for (int i = r - 1; i < n; ++i) tail.push_back(n + i);
    blocks.push_back(std::move(tail));
  }
  return PartitionDiagram(n, std::move(blocks));
}

PartitionDiagram PartitionDiagram::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("diagram parse error at position " +
                                std::to_string(pos) + ": " + what);
  };
  auto flush_block = [&] {
    if (current.empty()) fail("empty block");
    blocks.push_back(current);
    current.clear();
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == '|') {
      flush_block();
      ++pos;
      continue;
    }
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(std::string("unexpected character '") + text[pos] + "'");
    size_t end = pos;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    int label = std::stoi(text.substr(pos, end - pos));
    if (label < 1 || label > n) fail("dot label outside 1.." + std::to_string(n));
    pos = end;
    if (pos < text.size() && text[pos] == '\'') {
      current.push_back(n + label - 1);
      ++pos;
    } else {
      current.push_back(label - 1);
    }
  }
  flush_block();
  return PartitionDiagram(n, std::move(blocks));
}

bool PartitionDiagram::block_propagates(int block_index) const {
  const auto& block = blocks()[block_index];
  // Blocks are sorted, so it propagates iff it spans the row boundary.
  return block.front() < half_ && block.back() >= half_;
}

int PartitionDiagram::propagating_number() const {
  int count = 0;
  for (int b = 0; b < partition_.block_count(); ++b)
    if (block_propagates(b)) ++count;
  return count;
}

PartitionDiagram PartitionDiagram::involution() const {
  std::vector<std::vector<int>> flipped;
  flipped.reserve(blocks().size());
  for (const auto& block : blocks()) {
    std::vector<int> image;
    image.reserve(block.size());
    for (int e : block) image.push_back(e < half_ ? e + half_ : e - half_);
    flipped.push_back(std::move(image));
  }
  return PartitionDiagram(half_, std::move(flipped));
}

std::string PartitionDiagram::to_string() const {
  std::string out;
  for (size_t b = 0; b < blocks().size(); ++b) {
    if (b) out += '|';
    const auto& block = blocks()[b];
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      if (block[i] < half_) {
        out += std::to_string(block[i] + 1);
      } else {
        out += std::to_string(block[i] - half_ + 1);
        out += '\'';
      }
    }
  }
  return out;
}

Composition compose_diagrams(const PartitionDiagram& above,
                             const PartitionDiagram& below) {
  const int n = above.n();
  if (n != below.n())
    throw std::invalid_argument("composing diagrams of unequal strand count");
  // Dot layout while stacking: 0..n-1 outer top, n..2n-1 the contracted
  // middle row, 2n..3n-1 outer bottom.
  detail::UnionFind uf(3 * n);
  for (const auto& block : above.blocks())
    for (size_t i = 1; i < block.size(); ++i)
      uf.unite(block[0], block[i]);
  for (const auto& block : below.blocks()) {
    const int anchor = block[0] + n;
    for (size_t i = 1; i < block.size(); ++i) uf.unite(anchor, block[i] + n);
  }
  std::map<int, std::vector<int>> outer;
  std::vector<char> root_has_outer(3 * n, 0);
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    outer[r].push_back(i);
    root_has_outer[r] = 1;
  }
  for (int i = 2 * n; i < 3 * n; ++i) {
    const int r = uf.find(i);
    outer[r].push_back(i - n);  // bottom dot i-2n becomes 2n-dot n + (i-2n)
    root_has_outer[r] = 1;
  }
  int loops = 0;
  for (int i = n; i < 2 * n; ++i)
    if (uf.find(i) == i && !root_has_outer[i]) ++loops;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(outer.size());
  for (auto& [root, dots] : outer) blocks.push_back(std::move(dots));
  return {PartitionDiagram(n, std::move(blocks)), loops};
}

PartitionDiagram juxtapose(const PartitionDiagram& left,
                           const PartitionDiagram& right) {
  const int m = left.n();
  const int n = right.n();
  const int total = m + n;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(left.blocks().size() + right.blocks().size());
  for (const auto& block : left.blocks()) {
    std::vector<int> image;
    image.reserve(block.size());
    for (int e : block) image.push_back(e < m ? e : e + n);
    blocks.push_back(std::move(image));
  }
  for (const auto& block : right.blocks()) {
    std::vector<int> image;
    image.reserve(block.size());
    for (int e : block) image.push_back(e < n ? e + m : e + m + total - n);
    blocks.push_back(std::move(image));
  }
  return PartitionDiagram(total, std::move(blocks));
}

std::vector<PartitionDiagram> diagram_basis(int n) {
  std::vector<PartitionDiagram> out;
  for (const auto& p : enumerate_set_partitions(2 * n))
    out.push_back(PartitionDiagram(n, p.blocks()));
  return out;
}

AlgebraElement::AlgebraElement(const PartitionDiagram& d) : half_(d.n()) {
  terms_.emplace(d, DeltaPolynomial(Rational(1)));
}

void AlgebraElement::add_term(const PartitionDiagram& d,
                              const DeltaPolynomial& coeff) {
  if (d.n() != half_)
    throw std::invalid_argument("term strand count mismatch");
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(d, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.half_ != half_)
    throw std::invalid_argument("adding elements of unequal strand count");
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  out += other;
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  if (other.half_ != half_)
    throw std::invalid_argument("multiplying elements of unequal strand count");
  AlgebraElement out(half_);
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : other.terms_) {
      const Composition comp = compose_diagrams(d1, d2);
      out.add_term(comp.diagram,
                   c1 * c2 * DeltaPolynomial::delta_power(comp.delta_exponent));
    }
  }
  return out;
}

AlgebraElement AlgebraElement::operator*(const DeltaPolynomial& scalar) const {
  AlgebraElement out(half_);
  for (const auto& [d, c] : terms_) out.add_term(d, c * scalar);
  return out;
}

}  // namespace partalg
