#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqrank/errors.hpp"

namespace seqrank {

/// Sequential-rank code: a finite sequence t with t[i] in {1..i+1} for
/// 0-based index i, i.e. the i-th coordinate ranges over i+1 values. The
/// code of a real prefix records, at each step, the rank of the newest
/// value among everything seen so far.
class tri_code {
 public:
  tri_code() = default;

  explicit tri_code(std::vector<int> t) : t_(std::move(t)) {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i] < 1 || t_[i] > static_cast<int>(i) + 1) {
        throw malformed_code_error("code entry " + std::to_string(t_[i]) +
                                   " at position " + std::to_string(i + 1) +
                                   " is outside {1.." + std::to_string(i + 1) +
                                   "}");
      }
    }
  }

  std::size_t size() const { return t_.size(); }
  bool empty() const { return t_.empty(); }

  /// Entry at 1-based position i.
  int at(std::size_t i) const { return t_.at(i - 1); }

  const std::vector<int>& values() const { return t_; }

  /// The code of the first m positions (codes are prefix-stable).
  tri_code prefix(std::size_t m) const {
    if (m > t_.size()) throw bad_range_error("prefix longer than code");
    tri_code out;
    out.t_.assign(t_.begin(), t_.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
  }

  friend bool operator==(const tri_code&, const tri_code&) = default;
  friend auto operator<=>(const tri_code&, const tri_code&) = default;

 private:
  std::vector<int> t_;
};

/// Full 0-based ranks of a real prefix: k[i] counts how many of the n values
/// lie strictly below the i-th one, so k is a permutation of {0..n-1}. Rank
/// vectors index the Weyl simplices of the n-cube and double as the vertices
/// of the permutation tree.
class rank_vector {
 public:
  rank_vector() = default;

  explicit rank_vector(std::vector<int> k) : k_(std::move(k)) {
    const int n = static_cast<int>(k_.size());
    std::vector<bool> seen(k_.size(), false);
    for (int v : k_) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        throw not_a_permutation_error(
            "rank vector is not a permutation of {0.." + std::to_string(n - 1) +
            "}");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::size_t size() const { return k_.size(); }
  bool empty() const { return k_.empty(); }

  /// Entry at 1-based position i.
  int at(std::size_t i) const { return k_.at(i - 1); }

  const std::vector<int>& values() const { return k_; }

  friend bool operator==(const rank_vector&, const rank_vector&) = default;
  friend auto operator<=>(const rank_vector&, const rank_vector&) = default;

 private:
  std::vector<int> k_;
};

/// Special positions of a code and their running count d. Position 1 is
/// always special; position i+1 is special exactly when t[i+1] <= d[i],
/// which for any real preimage means the (i+1)-th value lies below the
/// first one.
struct special_profile {
  std::vector<bool> mask;  // mask[i]: 1-based position i+1 is special
  std::vector<int> d;      // d[i] = number of special positions among 1..i+1

  friend bool operator==(const special_profile&, const special_profile&) =
      default;
};

/// Checks that a prefix of reals is usable as an encoding input: every value
/// finite (NaN has no ordering) and all values pairwise distinct. Duplicates
/// arise with probability zero under any continuous measure and are rejected
/// rather than tie-broken, since an arbitrary tie-break would corrupt the
/// shift-intertwining identities.
inline void check_encodable(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v))
      throw invalid_value_error("non-finite value in real prefix");
  }
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw duplicate_value_error("real prefix has two equal values");
}

namespace detail {

/// Argsort-based 0-based full ranks; requires encodable input.
inline std::vector<int> full_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r)
    ranks[order[r]] = static_cast<int>(r);
  return ranks;
}

}  // namespace detail

}  // namespace seqrank
