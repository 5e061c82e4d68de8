#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cubecensus {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), size_t{0});
  }

  size_t find(size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b)
      parent_[b] = a;  // keep the smallest element as the root
    else
      parent_[a] = b;
    return true;
  }

  size_t size() const { return parent_.size(); }

  // Maps every element to a compact class id in order of first appearance of
  // the root; returns the number of classes.
  size_t compress(std::vector<int>& class_of) const {
    class_of.assign(parent_.size(), -1);
    std::vector<int> id_of_root(parent_.size(), -1);
    int next = 0;
    for (size_t x = 0; x < parent_.size(); ++x) {
      size_t r = find(x);
      if (id_of_root[r] < 0) id_of_root[r] = next++;
      class_of[x] = id_of_root[r];
    }
    return static_cast<size_t>(next);
  }

 private:
  mutable std::vector<size_t> parent_;
};

}  // namespace cubecensus
