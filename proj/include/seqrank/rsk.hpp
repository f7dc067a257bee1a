#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/rng.hpp"
#include "seqrank/tableau.hpp"
#include "seqrank/types.hpp"

namespace seqrank {

namespace detail {

/// Row-insertion state. insert() bumps the leftmost entry strictly greater
/// than the letter down to the next row and returns the cell where the
/// shape grew (always the end of some row).
class insertion_state {
 public:
  std::pair<std::size_t, std::size_t> insert(double v) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows_.size()) rows_.emplace_back();
      auto& row = rows_[r];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        return {r, row.size() - 1};
      }
      std::swap(*it, v);
    }
  }

  const std::vector<std::vector<double>>& rows() const { return rows_; }

  shape current_shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    return lens.empty() ? shape() : shape(std::move(lens));
  }

 private:
  std::vector<std::vector<double>> rows_;
};

}  // namespace detail

/// Insertion tableau P and recording tableau Q of a word; always of equal
/// shape.
struct rsk_pair {
  real_tableau p;
  standard_tableau q;

  friend bool operator==(const rsk_pair&, const rsk_pair&) = default;
};

/// Row-insert the word left to right; Q records in which cell the shape
/// grew at each step.
inline rsk_pair rsk_word(std::span<const double> x) {
  check_encodable(x);
  detail::insertion_state st;
  std::vector<std::vector<int>> qrows;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto [r, c] = st.insert(x[i]);
    if (r == qrows.size()) qrows.emplace_back();
    qrows[r].push_back(static_cast<int>(i + 1));
  }
  shape sh = st.current_shape();
  return {real_tableau(sh, st.rows()), standard_tableau(sh, std::move(qrows))};
}

/// Replace each entry by its 1-based rank among all entries. Order is
/// preserved, so the result is standard with the same shape.
inline standard_tableau standardize(const real_tableau& t) {
  std::vector<double> all;
  all.reserve(t.size());
  for (const auto& row : t.rows()) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  std::vector<std::vector<int>> rows(t.rows().size());
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    rows[r].reserve(t.rows()[r].size());
    for (double v : t.rows()[r]) {
      const auto pos = std::lower_bound(all.begin(), all.end(), v) - all.begin();
      rows[r].push_back(static_cast<int>(pos) + 1);
    }
  }
  return standard_tableau(t.get_shape(), std::move(rows));
}

/// RSK of a permutation given as a rank vector; both tableaux standard.
inline std::pair<standard_tableau, standard_tableau> rsk_ranks(
    const rank_vector& k) {
  std::vector<double> word(k.values().begin(), k.values().end());
  rsk_pair pq = rsk_word(word);
  return {standardize(pq.p), std::move(pq.q)};
}

/// Inverse RSK by reverse bumping in the order given by Q's entries n..1.
inline std::vector<double> rsk_inverse(const real_tableau& p,
                                       const standard_tableau& q) {
  if (p.get_shape() != q.get_shape())
    throw shape_mismatch_error("P and Q must have equal shapes");
  const std::size_t n = p.size();
  std::vector<std::vector<double>> rows = p.rows();
  std::vector<double> x(n);
  for (std::size_t j = n; j >= 1; --j) {
    const auto [r, c] = q.find_entry(static_cast<int>(j));
    if (c + 1 != rows[r].size())
      throw invalid_tableau_error("recording entry is not at a corner");
    double v = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (std::size_t rr = r; rr-- > 0;) {
      auto& row = rows[rr];
      auto it = std::lower_bound(row.begin(), row.end(), v);
      if (it == row.begin())
        throw invalid_tableau_error("reverse bump found no smaller entry");
      --it;
      std::swap(*it, v);
    }
    x[j - 1] = v;
  }
  return x;
}

/// Delete entry 1, slide the hole toward the outer boundary by repeatedly
/// swapping with the smaller of its right and below neighbors, then
/// decrement every entry.
inline standard_tableau promotion(const standard_tableau& q) {
  const std::size_t n = q.size();
  if (n < 2) throw too_short_error("promotion needs at least 2 entries");
  std::vector<std::vector<int>> rows = q.rows();
  std::size_t r = 0, c = 0;  // entry 1 sits at the top-left cell
  for (;;) {
    const bool has_right = c + 1 < rows[r].size();
    const bool has_below = r + 1 < rows.size() && c < rows[r + 1].size();
    if (!has_right && !has_below) break;
    const bool take_right =
        has_right && (!has_below || rows[r][c + 1] < rows[r + 1][c]);
    if (take_right) {
      rows[r][c] = rows[r][c + 1];
      ++c;
    } else {
      rows[r][c] = rows[r + 1][c];
      ++r;
    }
  }
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();
  std::vector<int> lens;
  lens.reserve(rows.size());
  for (auto& row : rows) {
    for (int& v : row) --v;
    lens.push_back(static_cast<int>(row.size()));
  }
  return standard_tableau(lens.empty() ? shape() : shape(std::move(lens)),
                          std::move(rows));
}

/// Shape of the insertion tableau of n i.i.d. uniform letters; distributed
/// by the Plancherel measure f_lambda^2 / n!.
inline shape plancherel_sample(std::size_t n, rng& gen) {
  const std::vector<double> x = sample_distinct_uniform(gen, n);
  return rsk_word(x).p.get_shape();
}

inline shape plancherel_sample(std::size_t n, std::uint64_t seed) {
  rng gen(seed);
  return plancherel_sample(n, gen);
}

/// P-tableau of the word with each value replaced by (its 1-based rank
/// among all n values) / n. Same cell layout as the raw P-tableau.
inline real_tableau normalized_p(std::span<const double> x) {
  check_encodable(x);
  const std::vector<int> ranks = detail::full_ranks(x);
  std::vector<double> w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    w[i] = static_cast<double>(ranks[i] + 1) / static_cast<double>(x.size());
  return rsk_word(w).p;
}

/// Least m >= 1 at which the recording tableaux of the two prefixes differ,
/// or 0 if they agree at every length up to the full (common) length.
/// Recording tableaux agree at length m iff the insertion-cell sequences
/// agree through m, so one cell comparison per step suffices.
inline std::size_t first_q_separation(std::span<const double> x,
                                      std::span<const double> y) {
  if (x.size() != y.size())
    throw length_mismatch_error("prefixes must have equal length");
  check_encodable(x);
  check_encodable(y);
  detail::insertion_state sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sx.insert(x[i]) != sy.insert(y[i])) return i + 1;
  return 0;
}

/// True iff the two words have equal recording tableaux.
inline bool q_equivalent(std::span<const double> x,
                         std::span<const double> y) {
  return first_q_separation(x, y) == 0;
}

/// The n! permutations grouped by common insertion tableau (p_classes, the
/// Knuth classes) and by common recording tableau (q_classes, the dual
/// Knuth classes). Exhaustive in n!, so n is capped.
struct knuth_partition {
  std::vector<std::pair<standard_tableau, std::vector<rank_vector>>> p_classes;
  std::vector<std::pair<standard_tableau, std::vector<rank_vector>>> q_classes;
};

inline knuth_partition knuth_classes(std::size_t n) {
  if (n < 1) throw bad_params_error("knuth_classes needs n >= 1");
  if (n > 8) throw too_large_error("knuth_classes is exhaustive; n <= 8");
  std::map<standard_tableau, std::vector<rank_vector>> by_p, by_q;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    rank_vector k(perm);
    auto [p, q] = rsk_ranks(k);
    by_p[p].push_back(k);
    by_q[q].push_back(k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  knuth_partition out;
  out.p_classes.assign(by_p.begin(), by_p.end());
  out.q_classes.assign(by_q.begin(), by_q.end());
  return out;
}

}  // namespace seqrank
