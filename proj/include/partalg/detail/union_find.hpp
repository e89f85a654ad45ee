#pragma once

#include <numeric>
#include <vector>

namespace partalg::detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace partalg::detail
