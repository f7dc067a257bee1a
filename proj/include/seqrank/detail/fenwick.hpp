#pragma once

#include <bit>
#include <cstddef>
#include <vector>

namespace seqrank::detail {

/// Fenwick tree over positions 1..n with integer counts.
class fenwick {
 public:
  explicit fenwick(std::size_t n) : n_(n), tree_(n + 1, 0) {}

  void add(std::size_t pos, int delta) {
    for (; pos <= n_; pos += pos & (~pos + 1)) tree_[pos] += delta;
  }

  /// Sum of counts at positions 1..pos.
  int prefix_sum(std::size_t pos) const {
    int s = 0;
    for (; pos > 0; pos -= pos & (~pos + 1)) s += tree_[pos];
    return s;
  }

  /// Smallest position p with prefix_sum(p) >= k. Requires nonnegative
  /// counts and k >= 1; returns n_+1 when the total is below k.
  std::size_t kth(int k) const {
    std::size_t pos = 0;
    std::size_t step = n_ == 0 ? 0 : std::bit_floor(n_);
    for (; step > 0; step >>= 1) {
      if (pos + step <= n_ && tree_[pos + step] < k) {
        pos += step;
        k -= tree_[pos];
      }
    }
    return pos + 1;
  }

 private:
  std::size_t n_;
  std::vector<int> tree_;
};

}  // namespace seqrank::detail
