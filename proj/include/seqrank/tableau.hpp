#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "seqrank/errors.hpp"

namespace seqrank {

/// A Young diagram given by its row lengths, weakly decreasing and positive.
/// The empty shape is the root of the Young graph.
class shape {
 public:
  shape() = default;

  explicit shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r] <= 0)
        throw invalid_shape_error("row lengths must be positive");
      if (r > 0 && rows_[r] > rows_[r - 1])
        throw invalid_shape_error("row lengths must be weakly decreasing");
    }
  }

  std::size_t num_rows() const { return rows_.size(); }

  /// Length of 0-based row r; 0 when the row does not exist.
  int row(std::size_t r) const {
    return r < rows_.size() ? rows_[r] : 0;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (int r : rows_) total += static_cast<std::size_t>(r);
    return total;
  }

  bool contains_cell(std::size_t r, std::size_t c) const {
    return static_cast<int>(c) < row(r);
  }

  const std::vector<int>& rows() const { return rows_; }

  friend bool operator==(const shape&, const shape&) = default;
  friend auto operator<=>(const shape&, const shape&) = default;

 private:
  std::vector<int> rows_;
};

/// Shapes obtained by adding one box at an addable corner, i.e. the
/// upward neighbors of s in the Young graph.
inline std::vector<shape> add_corner_shapes(const shape& s) {
  std::vector<shape> out;
  for (std::size_t r = 0; r <= s.num_rows(); ++r) {
    if (r == 0 || s.row(r) < s.row(r - 1)) {
      std::vector<int> rows = s.rows();
      if (r == s.num_rows())
        rows.push_back(1);
      else
        ++rows[r];
      out.emplace_back(std::move(rows));
    }
  }
  return out;
}

/// Shapes obtained by removing one box from a removable corner, i.e. the
/// downward neighbors of s in the Young graph.
inline std::vector<shape> remove_corner_shapes(const shape& s) {
  std::vector<shape> out;
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    if (r + 1 == s.num_rows() || s.row(r) > s.row(r + 1)) {
      std::vector<int> rows = s.rows();
      if (--rows[r] == 0) rows.pop_back();
      out.emplace_back(std::move(rows));
    }
  }
  return out;
}

/// True iff hi is lo plus exactly one box.
inline bool shape_covers(const shape& lo, const shape& hi) {
  if (hi.size() != lo.size() + 1) return false;
  bool seen_diff = false;
  const std::size_t rows = std::max(lo.num_rows(), hi.num_rows());
  for (std::size_t r = 0; r < rows; ++r) {
    const int diff = hi.row(r) - lo.row(r);
    if (diff == 0) continue;
    if (diff != 1 || seen_diff) return false;
    seen_diff = true;
  }
  return seen_diff;
}

namespace detail {

template <typename T>
void check_tableau_structure(const shape& sh,
                             const std::vector<std::vector<T>>& rows) {
  if (rows.size() != sh.num_rows())
    throw invalid_tableau_error("row count does not match shape");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != sh.row(r))
      throw invalid_tableau_error("row " + std::to_string(r + 1) +
                                  " does not match shape");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && !(rows[r][c - 1] < rows[r][c]))
        throw invalid_tableau_error("rows must increase strictly");
      if (r > 0 && !(rows[r - 1][c] < rows[r][c]))
        throw invalid_tableau_error("columns must increase strictly down");
    }
  }
}

}  // namespace detail

/// Standard Young tableau: entries are exactly 1..n, strictly increasing
/// along rows and down columns.
class standard_tableau {
 public:
  standard_tableau() = default;

  standard_tableau(shape sh, std::vector<std::vector<int>> rows)
      : shape_(std::move(sh)), rows_(std::move(rows)) {
    detail::check_tableau_structure(shape_, rows_);
    std::vector<bool> seen(shape_.size(), false);
    for (const auto& row : rows_) {
      for (int v : row) {
        if (v < 1 || v > static_cast<int>(shape_.size()) ||
            seen[static_cast<std::size_t>(v) - 1])
          throw invalid_tableau_error("entries must be exactly 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
      }
    }
  }

  const shape& get_shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  int at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// (row, col) of the given entry; scans the tableau.
  std::pair<std::size_t, std::size_t> find_entry(int v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < rows_[r].size(); ++c)
        if (rows_[r][c] == v) return {r, c};
    throw invalid_tableau_error("entry " + std::to_string(v) + " not present");
  }

  friend bool operator==(const standard_tableau&, const standard_tableau&) =
      default;
  friend auto operator<=>(const standard_tableau&, const standard_tableau&) =
      default;

 private:
  shape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Young tableau with pairwise distinct real entries, strictly increasing
/// along rows and down columns. These arise as insertion tableaux of words
/// with real letters.
class real_tableau {
 public:
  real_tableau() = default;

  real_tableau(shape sh, std::vector<std::vector<double>> rows)
      : shape_(std::move(sh)), rows_(std::move(rows)) {
    detail::check_tableau_structure(shape_, rows_);
    std::vector<double> all;
    all.reserve(shape_.size());
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw invalid_tableau_error("entries must be pairwise distinct");
  }

  const shape& get_shape() const { return shape_; }
  std::size_t size() const { return shape_.size(); }
  double at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  friend bool operator==(const real_tableau&, const real_tableau&) = default;
  friend auto operator<=>(const real_tableau&, const real_tableau&) = default;

 private:
  shape shape_;
  std::vector<std::vector<double>> rows_;
};

/// All partitions of n as shapes, in lexicographically decreasing order of
/// row vectors. n = 0 yields the empty shape.
inline std::vector<shape> all_shapes(std::size_t n) {
  std::vector<shape> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(rows.empty() ? shape() : shape(rows));
      return;
    }
    for (int first = std::min(cap, remaining); first >= 1; --first) {
      rows.push_back(first);
      self(self, remaining - first, first);
      rows.pop_back();
    }
  };
  rec(rec, static_cast<int>(n), static_cast<int>(n));
  return out;
}

/// All standard Young tableaux of the given shape, by recursion on the cell
/// holding the largest entry (one of the removable corners).
inline std::vector<standard_tableau> all_standard_tableaux(const shape& sh) {
  const std::size_t n = sh.size();
  if (n == 0) return {};
  if (n == 1) return {standard_tableau(sh, {{1}})};
  std::vector<standard_tableau> out;
  for (std::size_t r = 0; r < sh.num_rows(); ++r) {
    if (r + 1 != sh.num_rows() && sh.row(r) == sh.row(r + 1)) continue;
    std::vector<int> rows = sh.rows();
    if (--rows[r] == 0) rows.pop_back();
    const shape smaller = rows.empty() ? shape() : shape(std::move(rows));
    for (const auto& t : all_standard_tableaux(smaller)) {
      std::vector<std::vector<int>> cells = t.rows();
      if (r == cells.size()) cells.emplace_back();
      cells[r].push_back(static_cast<int>(n));
      out.emplace_back(sh, std::move(cells));
    }
  }
  return out;
}

/// All standard Young tableaux with at most max_cells cells (at least one).
inline std::vector<standard_tableau> all_standard_tableaux_up_to(
    std::size_t max_cells) {
  std::vector<standard_tableau> out;
  for (std::size_t n = 1; n <= max_cells; ++n)
    for (const auto& sh : all_shapes(n))
      for (auto& t : all_standard_tableaux(sh)) out.push_back(std::move(t));
  return out;
}

}  // namespace seqrank
