#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqrank/detail/fenwick.hpp"
#include "seqrank/errors.hpp"
#include "seqrank/rng.hpp"
#include "seqrank/types.hpp"

namespace seqrank {

/// Encodes a prefix of distinct reals into its sequential-rank code:
/// t[i] = 1 + #{k < i : x[k] < x[i]}, the 1-based rank of x[i] among
/// x[1..i]. O(n log n).
inline tri_code encode_prefix(std::span<const double> x) {
  check_encodable(x);
  const std::size_t n = x.size();
  const std::vector<int> ranks = detail::full_ranks(x);
  detail::fenwick seen(n);
  std::vector<int> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Earlier values are below x[i] exactly when their full rank is smaller.
    t[i] = 1 + seen.prefix_sum(static_cast<std::size_t>(ranks[i]));
    seen.add(static_cast<std::size_t>(ranks[i]) + 1, 1);
  }
  return tri_code(std::move(t));
}

/// Recovers the full 0-based ranks of any real prefix whose code is t.
/// Inverse of ranks_to_tricode. O(n log n).
///
/// Processing positions last-to-first, item i is the t[i]-th smallest among
/// the first i items, which after placing all later items occupy exactly the
/// still-free slots of the final ascending order; so item i takes the t[i]-th
/// free slot.
inline rank_vector tricode_to_ranks(const tri_code& t) {
  const std::size_t n = t.size();
  detail::fenwick free_slots(n);
  for (std::size_t s = 1; s <= n; ++s) free_slots.add(s, 1);
  std::vector<int> k(n);
  for (std::size_t i = n; i >= 1; --i) {
    const std::size_t slot = free_slots.kth(t.at(i));
    k[i - 1] = static_cast<int>(slot) - 1;
    free_slots.add(slot, -1);
  }
  return rank_vector(std::move(k));
}

/// Sequential ranks of a permutation given as full 0-based ranks:
/// t[i] = 1 + #{j < i : k[j] < k[i]}. Inverse of tricode_to_ranks.
/// O(n log n).
inline tri_code ranks_to_tricode(const rank_vector& k) {
  const std::size_t n = k.size();
  detail::fenwick seen(n);
  std::vector<int> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = k.values()[i];
    t[i] = 1 + seen.prefix_sum(static_cast<std::size_t>(v));
    seen.add(static_cast<std::size_t>(v) + 1, 1);
  }
  return tri_code(std::move(t));
}

/// Marks the special positions of a code. Position 1 is special; position
/// i+1 is special iff t[i+1] <= d[i] where d counts special positions so
/// far. For any preimage x this says exactly that x[i+1] < x[1].
inline special_profile special_positions(const tri_code& t) {
  const std::size_t n = t.size();
  special_profile out;
  out.mask.resize(n);
  out.d.resize(n);
  int d = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool special = (i == 1) || (t.at(i) <= d);
    if (special) ++d;
    out.mask[i - 1] = special;
    out.d[i - 1] = d;
  }
  return out;
}

/// The shift carried over to codes: the code of x[2..n] computed from the
/// code of x[1..n] alone. Output entry i is t[i+1] when position i+1 is
/// special, t[i+1]-1 otherwise, and the output is one shorter.
inline tri_code transfer(const tri_code& t) {
  const std::size_t n = t.size();
  if (n < 2) throw too_short_error("transfer needs a code of length >= 2");
  const special_profile sp = special_positions(t);
  std::vector<int> out(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    out[i - 1] = sp.mask[i] ? t.at(i + 1) : t.at(i + 1) - 1;
  return tri_code(std::move(out));
}

/// Estimate of the first coordinate of any preimage: d[n]/n. For product
/// uniform inputs this converges to x[1] almost surely (the count of
/// values below x[1] is binomial).
inline double estimate_first_coord(const tri_code& t) {
  if (t.empty()) throw malformed_code_error("empty code");
  const special_profile sp = special_positions(t);
  return static_cast<double>(sp.d.back()) / static_cast<double>(t.size());
}

/// Estimates the first m coordinates of a preimage of t using the plotting
/// position (k[i]+1)/(n+1) on the recovered full ranks; unbiased for uniform
/// order statistics, with error O(n^-1/2) in probability.
inline std::vector<double> reconstruct_prefix(const tri_code& t,
                                              std::size_t m) {
  const std::size_t n = t.size();
  if (m > n) throw bad_range_error("cannot reconstruct more values than coded");
  const rank_vector k = tricode_to_ranks(t);
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i)
    out[i] = static_cast<double>(k.values()[i] + 1) /
             static_cast<double>(n + 1);
  return out;
}

/// Draws a code from the product of uniform measures: t[i] uniform on
/// {1..i}, independent across positions.
inline tri_code sample_uniform_tricode(std::size_t n, rng& gen) {
  std::vector<int> t(n);
  for (std::size_t i = 1; i <= n; ++i)
    t[i - 1] = static_cast<int>(gen.next_int(1, static_cast<std::int64_t>(i)));
  return tri_code(std::move(t));
}

/// Deterministic per (n, seed).
inline tri_code sample_uniform_tricode(std::size_t n, std::uint64_t seed) {
  rng gen(seed);
  return sample_uniform_tricode(n, gen);
}

}  // namespace seqrank
