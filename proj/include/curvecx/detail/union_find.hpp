#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace curvecx::detail {

// Disjoint sets with a parity bit per element relative to its root, used
// both for plain connectivity and for two-colouring orientation problems.
class ParityUnionFind {
public:
  explicit ParityUnionFind(int size) : parent_(size), parity_(size, 0), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, parity of x relative to root).
  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, recomputing parities on the way.
    int node = x;
    int acc = parity;
    while (parent_[node] != root) {
      const int next = parent_[node];
      const int node_parity = parity_[node];
      parent_[node] = root;
      parity_[node] = static_cast<char>(acc);
      acc ^= node_parity;
      node = next;
    }
    return {root, parity};
  }

  int root(int x) { return find(x).first; }

  // Joins x and y with parity(x) xor parity(y) == relation. Returns false if
  // they were already joined with the opposite relation.
  bool unite(int x, int y, int relation = 0) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return ((px ^ py) == relation);
    if (rank_[rx] < rank_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[ry] = rx;
    parity_[ry] = static_cast<char>(px ^ py ^ relation);
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

private:
  std::vector<int> parent_;
  std::vector<char> parity_;
  std::vector<int> rank_;
};

}  // namespace curvecx::detail
