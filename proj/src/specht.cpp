#include "partalg/specht.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace partalg {

namespace {

void grow_tableaux(const IntegerPartition& shape, int next,
                   std::vector<int>& row_fill, Tableau& partial,
                   std::vector<Tableau>& out) {
  const int r = shape.weight();
  if (next > r) {
    out.push_back(partial);
    return;
  }
  for (int i = 0; i < shape.rows(); ++i) {
    const int c = row_fill[i];
    if (c >= shape.parts[i]) continue;
    if (i > 0 && row_fill[i - 1] <= c) continue;  // cell above must be filled
    partial[i].push_back(next);
    ++row_fill[i];
    grow_tableaux(shape, next + 1, row_fill, partial, out);
    --row_fill[i];
    partial[i].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const IntegerPartition& shape) {
  if (!shape.valid()) throw std::invalid_argument("invalid shape");
  std::vector<Tableau> out;
  std::vector<int> row_fill(shape.rows(), 0);
  Tableau partial(shape.rows());
  grow_tableaux(shape, 1, row_fill, partial, out);
  std::sort(out.begin(), out.end());  // row-reading lexicographic order
  return out;
}

SpechtRealization::SpechtRealization(const IntegerPartition& shape)
    : shape_(shape), degree_(shape.weight()) {
  const std::vector<Tableau> tableaux = standard_tableaux(shape);
  dimension_ = static_cast<int>(tableaux.size());
  if (degree_ < 2) return;

  // position[t][v] = (row, col) of value v+1 in tableau t
  std::vector<std::vector<std::pair<int, int>>> position(
      tableaux.size(), std::vector<std::pair<int, int>>(degree_));
  std::map<Tableau, int> index;
  for (size_t t = 0; t < tableaux.size(); ++t) {
    index[tableaux[t]] = static_cast<int>(t);
    for (int i = 0; i < static_cast<int>(tableaux[t].size()); ++i)
      for (int j = 0; j < static_cast<int>(tableaux[t][i].size()); ++j)
        position[t][tableaux[t][i][j] - 1] = {i, j};
  }
  auto content = [](std::pair<int, int> cell) { return cell.second - cell.first; };

  generators_.reserve(degree_ - 1);
  for (int i = 1; i < degree_; ++i) {
    RatMatrix m(dimension_, dimension_);
    for (size_t t = 0; t < tableaux.size(); ++t) {
      const auto a = position[t][i - 1];
      const auto b = position[t][i];
      if (a.first == b.first) {
        m.at(static_cast<int>(t), static_cast<int>(t)) = 1;
        continue;
      }
      if (a.second == b.second) {
        m.at(static_cast<int>(t), static_cast<int>(t)) = -1;
        continue;
      }
      const int d = content(b) - content(a);
      if (d < 0) continue;  // handled from the partner tableau
      Tableau swapped = tableaux[t];
      swapped[a.first][a.second] = i + 1;
      swapped[b.first][b.second] = i;
      const int u = index.at(swapped);
      const Rational inv_d = Rational(1) / d;
      m.at(static_cast<int>(t), static_cast<int>(t)) = inv_d;
      m.at(u, static_cast<int>(t)) = Rational(1) - inv_d * inv_d;
      m.at(static_cast<int>(t), u) = 1;
      m.at(u, u) = -inv_d;
    }
    generators_.push_back(std::move(m));
  }
}

RatMatrix SpechtRealization::permutation_matrix(const Permutation& sigma) const {
  if (sigma.degree() != degree_)
    throw std::invalid_argument("permutation degree does not match realization");
  RatMatrix m = RatMatrix::identity(dimension_);
  // sigma = s_{w[0]} o ... o s_{w.back()} with the rightmost factor applied
  // first, so the matrices multiply in the same order.
  for (int i : sigma.adjacent_word()) m = m * generator(i);
  return m;
}

Rational SpechtRealization::character(const Permutation& sigma) const {
  return permutation_matrix(sigma).trace();
}

SpechtRealization specht_realization(const IntegerPartition& shape) {
  return SpechtRealization(shape);
}

namespace {

std::vector<int> beta_set(const IntegerPartition& shape, int size) {
  std::vector<int> beta(size);
  for (int i = 0; i < size; ++i) {
    const int part = i < shape.rows() ? shape.parts[i] : 0;
    beta[i] = part + (size - 1 - i);
  }
  return beta;  // strictly decreasing
}

IntegerPartition shape_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  const int k = static_cast<int>(beta.size());
  for (int i = 0; i < k; ++i) {
    const int part = beta[i] - (k - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return IntegerPartition(std::move(parts));
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<CharKey, BigInt> char_cache;
std::mutex char_mutex;

BigInt character_recursive(const IntegerPartition& shape,
                           const IntegerPartition& cycle_type) {
  if (cycle_type.parts.empty()) return shape.weight() == 0 ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(char_mutex);
    auto it = char_cache.find({shape.parts, cycle_type.parts});
    if (it != char_cache.end()) return it->second;
  }
  const int strip = cycle_type.parts.front();
  IntegerPartition rest(
      std::vector<int>(cycle_type.parts.begin() + 1, cycle_type.parts.end()));
  std::vector<int> beta = beta_set(shape, shape.rows());
  std::set<int> members(beta.begin(), beta.end());
  BigInt total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - strip;
    if (target < 0 || members.count(target)) continue;
    int crossings = 0;  // beta entries strictly between target and beta[i]
    for (int other : beta)
      if (other > target && other < beta[i]) ++crossings;
    std::vector<int> next = beta;
    next[i] = target;
    const BigInt sub = character_recursive(shape_from_beta(std::move(next)), rest);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(char_mutex);
  char_cache[{shape.parts, cycle_type.parts}] = total;
  return total;
}

}  // namespace

BigInt symmetric_group_character(const IntegerPartition& shape,
                                 const IntegerPartition& cycle_type) {
  if (shape.weight() != cycle_type.weight())
    throw std::invalid_argument("shape and cycle type have different weights");
  return character_recursive(shape, cycle_type);
}

BigInt centralizer_order(const IntegerPartition& cycle_type) {
  std::map<int, int> multiplicity;
  for (int p : cycle_type.parts) ++multiplicity[p];
  BigInt z = 1;
  for (const auto& [len, count] : multiplicity) {
    for (int i = 0; i < count; ++i) z *= len;
    z *= factorial(count);
  }
  return z;
}

IntegerPartition join_cycle_types(const IntegerPartition& a,
                                  const IntegerPartition& b) {
  std::vector<int> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return IntegerPartition(std::move(parts));
}

namespace {

struct SkewFiller {
  std::vector<int> outer, inner;  // inner padded to outer's row count
  std::vector<int> weight_left;   // remaining cells of each value
  std::vector<int> placed;        // occurrences so far, for the ballot test
  std::vector<std::vector<int>> grid;
  BigInt count = 0;

  void fill(int row, int col) {
    // reverse reading order: rows top to bottom, right to left within a row
    while (row < static_cast<int>(outer.size()) && col < inner[row])
      ++row, col = row < static_cast<int>(outer.size()) ? outer[row] - 1 : 0;
    if (row == static_cast<int>(outer.size())) {
      ++count;
      return;
    }
    const int values = static_cast<int>(weight_left.size());
    for (int v = 0; v < values; ++v) {
      if (weight_left[v] == 0) continue;
      if (v > 0 && placed[v] >= placed[v - 1]) continue;  // ballot prefix
      if (col + 1 < outer[row] && grid[row][col + 1] < v) continue;  // row weak
      if (row > 0 && col < outer[row - 1] && col >= inner[row - 1] &&
          grid[row - 1][col] >= v)
        continue;  // column strict
      grid[row][col] = v;
      --weight_left[v];
      ++placed[v];
      if (col > inner[row])
        fill(row, col - 1);
      else
        fill(row + 1, row + 1 < static_cast<int>(outer.size())
                          ? outer[row + 1] - 1
                          : 0);
      grid[row][col] = -1;
      ++weight_left[v];
      --placed[v];
    }
  }
};

using LrKey = std::array<std::vector<int>, 3>;
std::map<LrKey, BigInt> lr_cache;
std::mutex lr_mutex;

}  // namespace

BigInt lr_coefficient(const IntegerPartition& outer,
                      const IntegerPartition& inner1,
                      const IntegerPartition& inner2) {
  if (outer.weight() != inner1.weight() + inner2.weight()) return 0;
  if (inner1.rows() > outer.rows()) return 0;
  for (int i = 0; i < inner1.rows(); ++i)
    if (inner1.parts[i] > outer.parts[i]) return 0;
  if (inner2.weight() == 0) return 1;
  {
    std::lock_guard<std::mutex> lock(lr_mutex);
    auto it = lr_cache.find({outer.parts, inner1.parts, inner2.parts});
    if (it != lr_cache.end()) return it->second;
  }
  SkewFiller filler;
  filler.outer = outer.parts;
  filler.inner.assign(outer.rows(), 0);
  for (int i = 0; i < inner1.rows(); ++i) filler.inner[i] = inner1.parts[i];
  filler.weight_left = inner2.parts;
  filler.placed.assign(inner2.rows(), 0);
  filler.grid.assign(outer.rows(), {});
  for (int i = 0; i < outer.rows(); ++i)
    filler.grid[i].assign(outer.parts[i], -1);
  filler.fill(0, outer.parts.empty() ? 0 : outer.parts[0] - 1);
  std::lock_guard<std::mutex> lock(lr_mutex);
  lr_cache[{outer.parts, inner1.parts, inner2.parts}] = filler.count;
  return filler.count;
}

BigInt kronecker_coefficient(const IntegerPartition& a,
                             const IntegerPartition& b,
                             const IntegerPartition& c) {
  const int r = a.weight();
  if (b.weight() != r || c.weight() != r)
    throw std::invalid_argument("kronecker arguments of unequal weight");
  const BigInt order = factorial(r);
  BigInt sum = 0;
  for (const auto& rho : enumerate_integer_partitions(r)) {
    const BigInt cls = order / centralizer_order(rho);
    sum += cls * symmetric_group_character(a, rho) *
           symmetric_group_character(b, rho) * symmetric_group_character(c, rho);
  }
  if (sum % order != 0)
    throw std::logic_error("character inner product is not integral");
  return sum / order;
}

std::vector<IntegerPartition> remove_one_box(const IntegerPartition& shape) {
  std::vector<IntegerPartition> out;
  for (int i = 0; i < shape.rows(); ++i) {
    if (i + 1 < shape.rows() && shape.parts[i] == shape.parts[i + 1]) continue;
    std::vector<int> parts = shape.parts;
    if (--parts[i] == 0) parts.erase(parts.begin() + i);
    out.push_back(IntegerPartition(std::move(parts)));
  }
  return out;
}

BigInt one_sided_induction(const IntegerPartition& outer,
                           const IntegerPartition& inner) {
  const int extra = outer.weight() - inner.weight();
  if (extra < 0) return 0;
  BigInt total = 0;
  for (const auto& tau : enumerate_integer_partitions(extra))
    total += standard_tableaux_count(tau) * lr_coefficient(outer, inner, tau);
  return total;
}

}  // namespace partalg
