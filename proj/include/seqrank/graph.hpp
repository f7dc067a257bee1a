#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/skeleton.hpp"
#include "seqrank/tableau.hpp"
#include "seqrank/types.hpp"

namespace seqrank {

/// A graded graph is anything that can enumerate covering neighbors one
/// level up and down and report a vertex's level. Level 0 holds the root.
template <typename G>
concept graded_graph_model =
    requires(const G& g, const typename G::vertex& v) {
      { g.up_neighbors(v) } -> std::same_as<std::vector<typename G::vertex>>;
      { g.down_neighbors(v) } -> std::same_as<std::vector<typename G::vertex>>;
      { g.level_of(v) } -> std::convertible_to<std::size_t>;
    };

/// The Young graph: vertices are shapes graded by size, covers add one box.
struct young_graph {
  using vertex = shape;

  std::vector<shape> up_neighbors(const shape& s) const {
    return add_corner_shapes(s);
  }
  std::vector<shape> down_neighbors(const shape& s) const {
    return remove_corner_shapes(s);
  }
  std::size_t level_of(const shape& s) const { return s.size(); }
  shape root() const { return shape(); }
};

/// The permutation tree: vertices are rank vectors graded by length; the
/// upward covers append a new last object of every possible rank, the
/// downward cover removes the last object.
struct permutation_tree {
  using vertex = rank_vector;

  std::vector<rank_vector> up_neighbors(const rank_vector& k) const {
    const std::size_t n = k.size();
    std::vector<rank_vector> out;
    out.reserve(n + 1);
    for (int j = 0; j <= static_cast<int>(n); ++j) {
      std::vector<int> next(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        const int v = k.values()[i];
        next[i] = v >= j ? v + 1 : v;
      }
      next[n] = j;
      out.emplace_back(std::move(next));
    }
    return out;
  }
  std::vector<rank_vector> down_neighbors(const rank_vector& k) const {
    if (k.empty()) return {};
    if (k.size() == 1) return {rank_vector()};
    return {tree_parent(k)};
  }
  std::size_t level_of(const rank_vector& k) const { return k.size(); }
  rank_vector root() const { return rank_vector(); }
};

/// Finite truncation of a graded graph with per-level vertex labels and
/// index-based covering edges. Vertices are (level, index) pairs so the
/// same label may appear at several levels (stationary graphs).
template <typename L>
class explicit_graph {
 public:
  struct vertex_id {
    std::size_t level;
    std::size_t index;

    friend bool operator==(const vertex_id&, const vertex_id&) = default;
    friend auto operator<=>(const vertex_id&, const vertex_id&) = default;
  };
  using vertex = vertex_id;

  explicit_graph(
      std::vector<std::vector<L>> levels,
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> covers)
      : levels_(std::move(levels)), covers_(std::move(covers)) {
    if (levels_.empty() || levels_[0].size() != 1)
      throw bad_levels_error("level 0 must hold exactly the root");
    if (covers_.size() + 1 != levels_.size())
      throw bad_levels_error("need one cover set per consecutive level pair");
    up_.resize(levels_.size());
    down_.resize(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      up_[l].resize(levels_[l].size());
      down_[l].resize(levels_[l].size());
    }
    for (std::size_t l = 0; l < covers_.size(); ++l) {
      for (const auto& [from, to] : covers_[l]) {
        if (from >= levels_[l].size() || to >= levels_[l + 1].size())
          throw bad_levels_error("cover edge endpoint out of range");
        up_[l][from].push_back(to);
        down_[l + 1][to].push_back(from);
      }
    }
    for (std::size_t l = 1; l < levels_.size(); ++l)
      for (std::size_t i = 0; i < levels_[l].size(); ++i)
        if (down_[l][i].empty())
          throw bad_levels_error("vertex above the root lacks a down edge");
  }

  std::vector<vertex_id> up_neighbors(const vertex_id& v) const {
    check(v);
    std::vector<vertex_id> out;
    if (v.level + 1 < levels_.size())
      for (std::size_t j : up_[v.level][v.index]) out.push_back({v.level + 1, j});
    return out;
  }

  std::vector<vertex_id> down_neighbors(const vertex_id& v) const {
    check(v);
    std::vector<vertex_id> out;
    for (std::size_t j : down_[v.level][v.index]) out.push_back({v.level - 1, j});
    return out;
  }

  std::size_t level_of(const vertex_id& v) const {
    check(v);
    return v.level;
  }

  const L& label(const vertex_id& v) const {
    check(v);
    return levels_[v.level][v.index];
  }

  vertex_id root() const { return {0, 0}; }
  std::size_t num_levels() const { return levels_.size(); }
  const std::vector<std::vector<L>>& level_labels() const { return levels_; }
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>&
  cover_edges() const {
    return covers_;
  }

 private:
  void check(const vertex_id& v) const {
    if (v.level >= levels_.size() || v.index >= levels_[v.level].size())
      throw bad_levels_error("vertex not in graph");
  }

  std::vector<std::vector<L>> levels_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> covers_;
  std::vector<std::vector<std::vector<std::size_t>>> up_, down_;
};

/// Breadth-first truncation of a graded graph to the given depth, with the
/// generating vertices kept as labels. Discovery order is deterministic.
template <graded_graph_model G>
explicit_graph<typename G::vertex> truncate(const G& g,
                                            const typename G::vertex& root,
                                            std::size_t depth) {
  using V = typename G::vertex;
  std::vector<std::vector<V>> levels{{root}};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> covers;
  for (std::size_t l = 0; l < depth; ++l) {
    std::map<V, std::size_t> index;
    std::vector<V> next;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < levels[l].size(); ++i) {
      for (V& u : g.up_neighbors(levels[l][i])) {
        auto [it, fresh] = index.try_emplace(u, next.size());
        if (fresh) next.push_back(std::move(u));
        edges.emplace_back(i, it->second);
      }
    }
    levels.push_back(std::move(next));
    covers.push_back(std::move(edges));
  }
  return explicit_graph<V>(std::move(levels), std::move(covers));
}

/// A path from the root: vertex at position i lives at level i.
template <typename V>
struct graph_path {
  std::vector<V> vertices;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const graph_path&, const graph_path&) = default;
};

template <graded_graph_model G>
bool covers(const G& g, const typename G::vertex& lo,
            const typename G::vertex& hi) {
  const auto ups = g.up_neighbors(lo);
  return std::find(ups.begin(), ups.end(), hi) != ups.end();
}

template <graded_graph_model G>
void validate_path(const G& g, const graph_path<typename G::vertex>& p) {
  if (p.vertices.empty()) throw invalid_path_error("path must not be empty");
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (g.level_of(p.vertices[i]) != i)
      throw invalid_path_error("vertex at position " + std::to_string(i) +
                               " is not at level " + std::to_string(i));
    if (i + 1 < p.vertices.size() &&
        !covers(g, p.vertices[i], p.vertices[i + 1]))
      throw invalid_path_error("consecutive vertices at levels " +
                               std::to_string(i) + "," + std::to_string(i + 1) +
                               " are not a cover");
  }
}

/// All u with v covered by u covered by w; the middle level of the
/// 2-interval [v, w].
template <graded_graph_model G>
std::vector<typename G::vertex> intermediates(const G& g,
                                              const typename G::vertex& v,
                                              const typename G::vertex& w) {
  if (g.level_of(w) != g.level_of(v) + 2)
    throw bad_levels_error("2-interval endpoints must be two levels apart");
  std::vector<typename G::vertex> out;
  for (auto& u : g.up_neighbors(v))
    if (covers(g, u, w)) out.push_back(std::move(u));
  return out;
}

/// The involution on the middle level of a 2-interval: swaps the two
/// intermediates when there are two, fixes the unique one otherwise.
template <graded_graph_model G>
typename G::vertex interval_involution(const G& g, const typename G::vertex& v,
                                       const typename G::vertex& w,
                                       const typename G::vertex& m) {
  const auto mids = intermediates(g, v, w);
  if (mids.size() > 2)
    throw too_many_intermediates_error(
        "2-interval has more than two intermediate vertices");
  const auto it = std::find(mids.begin(), mids.end(), m);
  if (it == mids.end())
    throw not_intermediate_error("vertex is not inside the 2-interval");
  if (mids.size() == 1) return m;
  return mids[it == mids.begin() ? 1 : 0];
}

/// Transfer built from a family of local rules: u_0 is the root and
/// u_k = rule(p, k, u_{k-1}) for k = 1..n-1, each step checked to extend
/// the output path by a covering edge at the right level.
template <graded_graph_model G, typename Rule>
graph_path<typename G::vertex> general_transfer(
    const G& g, const graph_path<typename G::vertex>& p, Rule&& rule) {
  validate_path(g, p);
  if (p.length() < 3)
    throw too_short_error("transfer needs a path of top level >= 2");
  graph_path<typename G::vertex> out;
  out.vertices.reserve(p.length() - 1);
  out.vertices.push_back(p.vertices[0]);
  for (std::size_t k = 1; k + 1 < p.length(); ++k) {
    typename G::vertex u = rule(p, k, out.vertices[k - 1]);
    if (g.level_of(u) != k || !covers(g, out.vertices[k - 1], u))
      throw rule_violation_error("rule output at level " + std::to_string(k) +
                                 " does not extend the path by a cover");
    out.vertices.push_back(std::move(u));
  }
  return out;
}

/// Transfer by 2-interval involutions: u_1 = v_1 and, for k >= 2, u_k is
/// the involution of the interval [u_{k-1}, v_{k+1}] applied to v_k. The
/// step is well defined because u_{k-1} stays covered by v_k.
template <graded_graph_model G>
graph_path<typename G::vertex> graph_transfer(
    const G& g, const graph_path<typename G::vertex>& p) {
  return general_transfer(
      g, p,
      [&g, &p](const graph_path<typename G::vertex>&, std::size_t k,
               const typename G::vertex& prev) {
        if (k == 1) return p.vertices[1];
        return interval_involution(g, prev, p.vertices[k + 1], p.vertices[k]);
      });
}

/// The Young-graph path of a standard tableau: level k is the shape of the
/// cells holding entries <= k.
inline graph_path<shape> tableau_to_path(const standard_tableau& t) {
  graph_path<shape> p;
  p.vertices.reserve(t.size() + 1);
  p.vertices.push_back(shape());
  std::vector<int> lens;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    const auto [r, c] = t.find_entry(static_cast<int>(k));
    if (r == lens.size())
      lens.push_back(1);
    else
      ++lens[r];
    p.vertices.push_back(shape(lens));
  }
  return p;
}

/// Inverse of tableau_to_path: entry k goes in the cell where the shape
/// grew between levels k-1 and k.
inline standard_tableau path_to_tableau(const graph_path<shape>& p) {
  validate_path(young_graph{}, p);
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 1; k < p.vertices.size(); ++k) {
    const shape& prev = p.vertices[k - 1];
    const shape& cur = p.vertices[k];
    std::size_t grown = cur.num_rows();
    for (std::size_t r = 0; r < cur.num_rows(); ++r)
      if (cur.row(r) != prev.row(r)) {
        grown = r;
        break;
      }
    if (grown == rows.size()) rows.emplace_back();
    rows[grown].push_back(static_cast<int>(k));
  }
  const shape& top = p.vertices.back();
  return standard_tableau(top, std::move(rows));
}

/// True iff the two equally long paths agree at every level above n.
template <typename V>
bool tail_equivalent(const graph_path<V>& p, const graph_path<V>& q,
                     std::size_t n) {
  if (p.length() != q.length() || p.length() < n + 1)
    throw length_mismatch_error("paths must have equal length >= n + 1");
  for (std::size_t i = n + 1; i < p.length(); ++i)
    if (!(p.vertices[i] == q.vertices[i])) return false;
  return true;
}

}  // namespace seqrank
