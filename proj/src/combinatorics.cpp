#include "partalg/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace partalg {

namespace {

std::vector<std::vector<int>> canonicalize_blocks(
    int ground, std::vector<std::vector<int>> blocks) {
  std::vector<char> seen(ground, 0);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int e : block) {
      if (e < 0 || e >= ground)
        throw std::invalid_argument("block element out of range");
      if (seen[e]) throw std::invalid_argument("repeated element in blocks");
      seen[e] = 1;
      ++covered;
    }
  }
  if (covered != ground)
    throw std::invalid_argument("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_(ground_size),
      blocks_(canonicalize_blocks(ground_size, std::move(blocks))),
      index_(ground_size, -1) {
  for (int b = 0; b < block_count(); ++b)
    for (int e : blocks_[b]) index_[e] = b;
}

SetPartition SetPartition::singletons(int ground_size) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(ground_size);
  for (int i = 0; i < ground_size; ++i) blocks.push_back({i});
  return SetPartition(ground_size, std::move(blocks));
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  int top = -1;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
    if (rgs[i] < 0 || rgs[i] > top + 1)
      throw std::invalid_argument("not a restricted growth string");
    if (rgs[i] == top + 1) {
      blocks.emplace_back();
      ++top;
    }
    blocks[rgs[i]].push_back(i);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

int SetPartition::block_of(int element) const {
  if (element < 0 || element >= ground_)
    throw std::out_of_range("element outside ground set");
  return index_[element];
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative ground size");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition(0, {}));
    return out;
  }
  std::vector<int> rgs(n, 0);
  // Lexicographic walk over restricted growth strings.
  while (true) {
    out.push_back(SetPartition::from_rgs(rgs));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt bell(int n) {
  if (n < 0) throw std::invalid_argument("bell of negative argument");
  // Bell triangle: row starts with the last entry of the previous row.
  std::vector<BigInt> row{1};
  BigInt result = 1;  // bell(0)
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
    result = row.front();
  }
  return result;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative stirling argument");
  if (k > n) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(n + 1, 0);
    for (int j = 1; j <= i; ++j) next[j] = row[j - 1] + BigInt(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt value = 1;
  for (int i = 0; i < k; ++i) {
    value *= n - i;
    value /= i + 1;
  }
  return value;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt value = 1;
  for (int i = 2; i <= n; ++i) value *= i;
  return value;
}

int IntegerPartition::weight() const {
  int total = 0;
  for (int p : parts) total += p;
  return total;
}

bool IntegerPartition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::vector<int> IntegerPartition::conjugate() const {
  std::vector<int> conj;
  if (parts.empty()) return conj;
  conj.resize(parts[0], 0);
  for (int p : parts)
    for (int c = 0; c < p; ++c) ++conj[c];
  return conj;
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition literal must look like [3,1,1]");
  s = s.substr(1, s.size() - 2);
  IntegerPartition out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty partition entry");
    out.parts.push_back(std::stoi(item));
  }
  if (!out.valid())
    throw std::invalid_argument("parts must be positive and weakly decreasing");
  return out;
}

std::string IntegerPartition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ']';
  return out;
}

namespace {

void descend(int remaining, int cap, std::vector<int>& stack,
             std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition(stack));
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    stack.push_back(next);
    descend(remaining - next, next, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> enumerate_integer_partitions(int r) {
  if (r < 0) throw std::invalid_argument("negative partition weight");
  std::vector<IntegerPartition> out;
  std::vector<int> stack;
  descend(r, r, stack, out);
  if (r == 0) out.assign(1, IntegerPartition{});
  return out;
}

BigInt standard_tableaux_count(const IntegerPartition& shape) {
  if (!shape.valid()) throw std::invalid_argument("invalid partition");
  const auto conj = shape.conjugate();
  BigInt value = factorial(shape.weight());
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = 0; j < shape.parts[i]; ++j) {
      const int hook = shape.parts[i] - j + conj[j] - i - 1;
      value /= hook;
    }
  }
  return value;
}

Permutation::Permutation(int degree) : images_(degree) {
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::parse(const std::string& text, int degree) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw std::invalid_argument("empty permutation literal");
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated one-line form");
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string item;
    std::vector<int> images;
    while (std::getline(in, item, ',')) images.push_back(std::stoi(item) - 1);
    if (degree >= 0 && degree != static_cast<int>(images.size()))
      throw std::invalid_argument("one-line form has the wrong degree");
    return Permutation(std::move(images));
  }
  if (s.front() != '(')
    throw std::invalid_argument("expected [..] one-line or (..) cycle form");
  if (degree < 0)
    throw std::invalid_argument("cycle form needs an explicit degree");
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  // cycle entries are space or comma separated, so keep the original text
  size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '('");
    const size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unmatched '('");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    size_t i = 0;
    while (i < body.size()) {
      size_t j = i;
      while (j < body.size() && ::isdigit(body[j])) ++j;
      if (j == i) { ++i; continue; }
      cycle.push_back(std::stoi(body.substr(i, j - i)) - 1);
      i = j;
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k) {
      if (cycle[k] < 0 || cycle[k] >= degree)
        throw std::invalid_argument("cycle entry out of range");
      images[cycle[k]] = cycle[k + 1];
    }
    if (!cycle.empty()) {
      if (cycle.back() < 0 || cycle.back() >= degree)
        throw std::invalid_argument("cycle entry out of range");
      images[cycle.back()] = cycle.front();
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("composing permutations of unequal degree");
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = images_[other.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

IntegerPartition Permutation::cycle_type() const {
  std::vector<char> seen(degree(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return IntegerPartition(std::move(lengths));
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble sort of the one-line word; collects a reduced factorization
  // sigma = s_{w[0]} o ... o s_{w.back()}, rightmost factor applied first.
  std::vector<int> line(degree());
  for (int i = 0; i < degree(); ++i) line[i] = images_[i];
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < degree(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.push_back(i + 1);  // 1-based generator index
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Permutation::to_one_line_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  out += ']';
  return out;
}

}  // namespace partalg
