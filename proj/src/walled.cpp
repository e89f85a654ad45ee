#include "partalg/walled.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <tuple>

#include "partalg/diagram.hpp"

namespace partalg {

bool WallTuple::operator<(const WallTuple& other) const {
  const auto key = [](const WallTuple& t) {
    return std::array<int, 4>{t.through_plain, t.through_labelled,
                              t.left_labelled, t.right_labelled};
  };
  return key(*this) < key(other);
}

std::string WallTuple::to_string() const {
  return "(" + std::to_string(through_plain) + "," +
         std::to_string(through_labelled) + "," + std::to_string(left_labelled) +
         "," + std::to_string(right_labelled) + ")";
}

WallTuple classify(const HalfDiagram& v, int wall) {
  if (wall < 0 || wall > v.n())
    throw std::invalid_argument("wall outside the dot range");
  WallTuple t;
  for (int b = 0; b < v.partition().block_count(); ++b) {
    const auto& block = v.blocks()[b];
    const bool crosses = block.front() < wall && block.back() >= wall;
    const bool labelled = v.is_labelled(b);
    if (crosses && labelled)
      ++t.through_labelled;
    else if (crosses)
      ++t.through_plain;
    else if (labelled && block.front() < wall)
      ++t.left_labelled;
    else if (labelled)
      ++t.right_labelled;
  }
  return t;
}

bool tuple_less(const WallTuple& lhs, const WallTuple& rhs) {
  if (lhs.rank() != rhs.rank())
    throw std::invalid_argument("comparing profiles with different label counts");
  if (lhs.through_plain < rhs.through_plain)
    return lhs.through_labelled - rhs.through_labelled <=
           rhs.through_plain - lhs.through_plain;
  return lhs.through_plain == rhs.through_plain &&
         lhs.through_labelled < rhs.through_labelled;
}

bool tuple_leq(const WallTuple& lhs, const WallTuple& rhs) {
  return lhs == rhs || tuple_less(lhs, rhs);
}

std::vector<WallTuple> enumerate_index_set(int m, int n, int r) {
  std::vector<WallTuple> out;
  for (int a = 0; a <= std::min(m, n); ++a)
    for (int b = 0; a + b <= std::min(m, n) && b <= r; ++b)
      for (int c = 0; b + c <= r; ++c) {
        const int d = r - b - c;
        if (a + b + c > m || a + b + d > n) continue;
        out.push_back(WallTuple{a, b, c, d});
      }
  // already generated in (a, b, c) ascending lexicographic order
  return out;
}

HalfDiagram tuple_witness(int m, int n, const WallTuple& t) {
  const int T = t.through();
  if (T + t.left_labelled > m || T + t.right_labelled > n)
    throw std::invalid_argument("profile does not fit on the dots");
  std::vector<std::vector<int>> blocks;
  std::vector<int> labelled;
  for (int i = 0; i < T; ++i) {
    blocks.push_back({i, m + i});
    if (i >= t.through_plain) labelled.push_back(static_cast<int>(blocks.size()) - 1);
  }
  for (int i = 0; i < t.left_labelled; ++i) {
    blocks.push_back({T + i});
    labelled.push_back(static_cast<int>(blocks.size()) - 1);
  }
  for (int i = 0; i < t.right_labelled; ++i) {
    blocks.push_back({m + T + i});
    labelled.push_back(static_cast<int>(blocks.size()) - 1);
  }
  for (int i = T + t.left_labelled; i < m; ++i) blocks.push_back({i});
  for (int i = T + t.right_labelled; i < n; ++i) blocks.push_back({m + i});
  return HalfDiagram(m + n, std::move(blocks), labelled);
}

BigInt count_with_tuple(int m, int n, const WallTuple& t) {
  const int T = t.through();
  BigInt total = 0;
  for (int p = T + t.left_labelled; p <= m; ++p) {
    for (int q = T + t.right_labelled; q <= n; ++q) {
      total += stirling2(m, p) * stirling2(n, q) * binomial(p, T) *
               binomial(q, T) * factorial(T) *
               binomial(T, t.through_labelled) *
               binomial(p - T, t.left_labelled) *
               binomial(q - T, t.right_labelled);
    }
  }
  return total;
}

std::optional<std::string> action_order_violation(int m, int n, int r) {
  const auto left = diagram_basis(m);
  const auto right = diagram_basis(n);
  std::vector<PartitionDiagram> products;
  products.reserve(left.size() * right.size());
  for (const auto& dl : left)
    for (const auto& dr : right) products.push_back(juxtapose(dl, dr));
  for (const auto& v : enumerate_half_diagrams(m + n, r)) {
    const WallTuple before = classify(v, m);
    for (const auto& d : products) {
      const auto moved = act(d, v);
      if (!moved) continue;
      const WallTuple after = classify(moved->result, m);
      if (!tuple_leq(after, before))
        return "profile " + before.to_string() + " raised to " +
               after.to_string() + " by " + d.to_string() + " acting on " +
               v.to_string();
    }
  }
  return std::nullopt;
}

std::set<WallTuple> one_step_targets(const WallTuple& t) {
  std::set<WallTuple> out;
  const int a = t.through_plain, b = t.through_labelled;
  const int c = t.left_labelled, d = t.right_labelled;
  // x, y: through labels dropping to the left / right side.
  // u1, u2: left labels turning through / crossing to the right.
  // w1, w2: right labels turning through / crossing to the left.
  for (int x = 0; x <= b; ++x)
    for (int y = 0; x + y <= b; ++y)
      for (int u1 = 0; u1 <= c; ++u1)
        for (int u2 = 0; u1 + u2 <= c; ++u2)
          for (int w1 = 0; w1 <= d; ++w1)
            for (int w2 = 0; w1 + w2 <= d; ++w2) {
              const int consumed = u1 + u2 + w1 + w2;
              if (consumed > a) continue;
              for (int ap = 0; ap <= a - consumed; ++ap)
                out.insert(WallTuple{ap, b - x - y + u1 + w1,
                                     c - u1 - u2 + x + w2,
                                     d - w1 - w2 + y + u2});
            }
  return out;
}

std::set<WallTuple> reachable_tuples(const WallTuple& start) {
  std::set<WallTuple> seen{start};
  std::deque<WallTuple> queue{start};
  while (!queue.empty()) {
    const WallTuple t = queue.front();
    queue.pop_front();
    for (const WallTuple& next : one_step_targets(t))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

std::vector<std::pair<WallTuple, WallTuple>> covering_edges(
    const WallTuple& start) {
  const std::set<WallTuple> nodes = reachable_tuples(start);
  std::map<WallTuple, std::set<WallTuple>> below;  // strictly reachable from
  for (const WallTuple& t : nodes) {
    below[t] = reachable_tuples(t);
    below[t].erase(t);
  }
  std::vector<std::pair<WallTuple, WallTuple>> edges;
  for (const WallTuple& upper : nodes) {
    for (const WallTuple& lower : below[upper]) {
      bool covered = false;
      for (const WallTuple& mid : below[upper]) {
        if (mid == lower) continue;
        if (below[mid].count(lower)) {
          covered = true;
          break;
        }
      }
      if (!covered) edges.emplace_back(lower, upper);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::set<WallTuple> observed_one_step(int m, int n, const WallTuple& t) {
  const auto left = diagram_basis(m);
  const auto right = diagram_basis(n);
  std::vector<PartitionDiagram> products;
  products.reserve(left.size() * right.size());
  for (const auto& dl : left)
    for (const auto& dr : right) products.push_back(juxtapose(dl, dr));
  std::set<WallTuple> out;
  for (const auto& v : enumerate_half_diagrams(m + n, t.rank())) {
    if (!(classify(v, m) == t)) continue;
    for (const auto& d : products) {
      const auto moved = act(d, v);
      if (moved) out.insert(classify(moved->result, m));
    }
  }
  return out;
}

bool FiltrationRecord::operator<(const FiltrationRecord& other) const {
  const auto key = [](const FiltrationRecord& r) {
    return std::tie(r.mu, r.mu_plain, r.mu_labelled, r.left_weight,
                    r.right_weight);
  };
  return key(*this) < key(other);
}

std::vector<FiltrationRecord> layer_filtration(const WallTuple& t,
                                               const IntegerPartition& lambda) {
  if (lambda.weight() != t.rank())
    throw std::invalid_argument("shape weight must match the label count");
  std::vector<FiltrationRecord> out;
  const auto mus = enumerate_integer_partitions(t.through());
  const auto plains = enumerate_integer_partitions(t.through_plain);
  const auto labels = enumerate_integer_partitions(t.through_labelled);
  const auto lefts =
      enumerate_integer_partitions(t.through_labelled + t.left_labelled);
  const auto rights = enumerate_integer_partitions(t.right_labelled);
  for (const auto& left_weight : lefts) {
    for (const auto& right_weight : rights) {
      const BigInt outer = lr_coefficient(lambda, left_weight, right_weight);
      if (outer == 0) continue;
      for (const auto& mu : mus) {
        for (const auto& mu_labelled : labels) {
          for (const auto& mu_plain : plains) {
            const BigInt inner = lr_coefficient(mu, mu_labelled, mu_plain);
            if (inner == 0) continue;
            out.push_back(FiltrationRecord{mu, mu_plain, mu_labelled,
                                           left_weight, right_weight,
                                           outer * inner});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt record_right_multiplicity(const FiltrationRecord& record,
                                 const IntegerPartition& nu2) {
  return lr_coefficient(nu2, record.mu, record.right_weight);
}

BigInt record_left_multiplicity(const FiltrationRecord& record,
                                const WallTuple& t, const IntegerPartition& nu1) {
  const int tl = t.through_labelled;
  const int ll = t.left_labelled;
  BigInt total = 0;
  for (const auto& alpha2 : enumerate_integer_partitions(tl)) {
    for (const auto& gamma : enumerate_integer_partitions(ll)) {
      const BigInt split = lr_coefficient(record.left_weight, alpha2, gamma);
      if (split == 0) continue;
      for (const auto& alpha : enumerate_integer_partitions(tl)) {
        const BigInt twist =
            kronecker_coefficient(record.mu_labelled, alpha2, alpha);
        if (twist == 0) continue;
        BigInt lift = 0;
        for (const auto& kappa : enumerate_integer_partitions(tl + ll)) {
          const BigInt glue = lr_coefficient(kappa, alpha, gamma);
          if (glue == 0) continue;
          lift += glue * lr_coefficient(nu1, kappa, record.mu_plain);
        }
        total += split * twist * lift;
      }
    }
  }
  return total;
}

std::map<std::pair<IntegerPartition, IntegerPartition>, BigInt>
layer_cell_multiplicities(const WallTuple& t, const IntegerPartition& lambda) {
  std::map<std::pair<IntegerPartition, IntegerPartition>, BigInt> out;
  const auto records = layer_filtration(t, lambda);
  const auto nu1s = enumerate_integer_partitions(t.left_rank());
  const auto nu2s = enumerate_integer_partitions(t.right_rank());
  for (const auto& nu1 : nu1s) {
    for (const auto& nu2 : nu2s) {
      BigInt total = 0;
      for (const auto& record : records)
        total += record.multiplicity *
                 record_left_multiplicity(record, t, nu1) *
                 record_right_multiplicity(record, nu2);
      if (total != 0) out[{nu1, nu2}] = total;
    }
  }
  return out;
}

bool CellPairKey::operator<(const CellPairKey& other) const {
  const auto key = [](const CellPairKey& k) {
    return std::tie(k.left_rank, k.left_shape, k.right_rank, k.right_shape);
  };
  return key(*this) < key(other);
}

RestrictionDecomposition restriction_decomposition(int m, int n, int r,
                                                   const IntegerPartition& shape) {
  if (shape.weight() != r)
    throw std::invalid_argument("shape weight must equal the label count");
  RestrictionDecomposition out;
  out.m = m;
  out.n = n;
  out.r = r;
  out.shape = shape;
  for (const WallTuple& t : enumerate_index_set(m, n, r)) {
    RestrictionLayer layer;
    layer.tuple = t;
    layer.records = layer_filtration(t, shape);
    layer.cell_multiplicities = layer_cell_multiplicities(t, shape);
    for (const auto& [pair, mult] : layer.cell_multiplicities)
      out.cells[CellPairKey{t.left_rank(), pair.first, t.right_rank(),
                            pair.second}] += mult;
    out.layers.push_back(std::move(layer));
  }
  return out;
}

}  // namespace partalg
