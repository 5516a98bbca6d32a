#pragma once

#include <numeric>
#include <vector>

namespace spinmod::detail {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  // Dense labels ordered by the smallest member of each set.
  std::vector<int> labels() {
    const int n = static_cast<int>(parent_.size());
    std::vector<int> root_label(n, -1);
    std::vector<int> out(n);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      int r = find(x);
      if (root_label[r] < 0) root_label[r] = next++;
      out[x] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace spinmod::detail
