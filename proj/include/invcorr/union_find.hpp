#ifndef INVCORR_UNION_FIND_HPP_
#define INVCORR_UNION_FIND_HPP_

#include <vector>

#include "invcorr/core.hpp"

namespace invcorr {

// Quotient kernel shared by the tensor product and the Rees congruences.
class UnionFind {
 public:
  explicit UnionFind(Idx n) : parent_(n) {
    for (Idx i = 0; i < n; ++i) {
      parent_[i] = i;
    }
  }

  Idx find(Idx x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;  // keep the smaller index as root
    return true;
  }

  // class ids numbered by smallest member, ascending
  std::vector<Idx> classes(Idx* count = nullptr) {
    std::vector<Idx> out(parent_.size(), -1);
    Idx next = 0;
    for (Idx i = 0; i < static_cast<Idx>(parent_.size()); ++i) {
      Idx r = find(i);
      if (out[r] < 0) {
        out[r] = next++;
      }
      out[i] = out[r];
    }
    if (count) {
      *count = next;
    }
    return out;
  }

 private:
  std::vector<Idx> parent_;
};

}  // namespace invcorr

#endif  // INVCORR_UNION_FIND_HPP_
