#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/types.hpp"

namespace seqrank {

/// Full 0-based ranks of a prefix of distinct reals:
/// k[i] = #{s <= n : x[s] < x[i]}. Identifies the Weyl simplex of x, i.e. a
/// vertex of level n of the permutation tree.
inline rank_vector weyl_index(std::span<const double> x) {
  check_encodable(x);
  return rank_vector(detail::full_ranks(x));
}

/// Ordinary tree edge: the rank vector after removing the last object.
/// Drops k[n] and closes the gap it leaves in the value range.
inline rank_vector tree_parent(const rank_vector& k) {
  const std::size_t n = k.size();
  if (n < 2) throw too_short_error("tree_parent needs length >= 2");
  const int last = k.values()[n - 1];
  std::vector<int> out(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int v = k.values()[i];
    out[i] = v > last ? v - 1 : v;
  }
  return rank_vector(std::move(out));
}

/// Translation edge: the rank vector after removing the first object, i.e.
/// the index of the shifted simplex. r[i] = k[i+1], minus one when the
/// removed first object lay below it.
inline rank_vector translation(const rank_vector& k) {
  const std::size_t n = k.size();
  if (n < 2) throw too_short_error("translation needs length >= 2");
  const int first = k.values()[0];
  std::vector<int> out(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const int v = k.values()[i];
    out[i - 1] = v < first ? v : v - 1;
  }
  return rank_vector(std::move(out));
}

/// A path in the permutation tree: vertices g_1..g_n with g_i of length i
/// and g_i the parent of g_{i+1}.
struct tree_path {
  std::vector<rank_vector> vertices;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const tree_path&, const tree_path&) = default;
};

inline void validate(const tree_path& p) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (p.vertices[i].size() != i + 1)
      throw inconsistent_path_error("tree path level " + std::to_string(i + 1) +
                                    " has wrong length");
    if (i + 1 < p.vertices.size() &&
        tree_parent(p.vertices[i + 1]) != p.vertices[i])
      throw inconsistent_path_error(
          "tree path vertices " + std::to_string(i + 1) + " and " +
          std::to_string(i + 2) + " are not parent and child");
  }
}

/// The tree path of a real prefix: the rank vectors of all its prefixes.
inline tree_path tree_path_of(std::span<const double> x) {
  tree_path p;
  p.vertices.reserve(x.size());
  for (std::size_t i = 1; i <= x.size(); ++i)
    p.vertices.push_back(weyl_index(x.subspan(0, i)));
  return p;
}

/// Transfer on tree paths: level i of the output is the translation of
/// level i+1 of the input. Well-defined because removing the first and the
/// last object commute.
inline tree_path tree_transfer(const tree_path& p) {
  if (p.length() < 2) throw too_short_error("tree_transfer needs length >= 2");
  validate(p);
  tree_path out;
  out.vertices.reserve(p.length() - 1);
  for (std::size_t i = 1; i < p.length(); ++i)
    out.vertices.push_back(translation(p.vertices[i]));
  validate(out);
  return out;
}

/// True iff the n! coordinate permutations of x visit every Weyl simplex
/// (every rank vector) exactly once. Exhaustive in n!, so n is capped.
inline bool orbit_complement_check(std::size_t n, std::span<const double> x) {
  if (x.size() != n)
    throw length_mismatch_error("prefix length does not match n");
  if (n > 8) throw too_large_error("orbit check is exhaustive; n <= 8");
  check_encodable(x);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::set<rank_vector> hit;
  std::size_t count = 0;
  std::vector<double> permuted(n);
  do {
    for (std::size_t i = 0; i < n; ++i) permuted[i] = x[idx[i]];
    hit.insert(weyl_index(permuted));
    ++count;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return hit.size() == count;
}

}  // namespace seqrank
