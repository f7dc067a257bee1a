#include "seqrank/graph.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "seqrank/rsk.hpp"

namespace {

using seqrank::all_shapes;
using seqrank::all_standard_tableaux;
using seqrank::explicit_graph;
using seqrank::graph_path;
using seqrank::graph_transfer;
using seqrank::intermediates;
using seqrank::interval_involution;
using seqrank::permutation_tree;
using seqrank::rank_vector;
using seqrank::shape;
using seqrank::standard_tableau;
using seqrank::tableau_to_path;
using seqrank::truncate;
using seqrank::young_graph;

graph_path<shape> ypath(std::vector<std::vector<int>> shapes) {
  graph_path<shape> p;
  for (auto& rows : shapes)
    p.vertices.push_back(rows.empty() ? shape() : shape(std::move(rows)));
  return p;
}

TEST(shape, validation_and_covers) {
  EXPECT_THROW(shape({1, 2}), seqrank::invalid_shape_error);
  EXPECT_THROW(shape({2, 0}), seqrank::invalid_shape_error);
  EXPECT_EQ(shape({3, 1}).size(), 4u);
  EXPECT_TRUE(seqrank::shape_covers(shape({2, 1}), shape({2, 2})));
  EXPECT_FALSE(seqrank::shape_covers(shape({2, 1}), shape({3, 2})));
  EXPECT_FALSE(seqrank::shape_covers(shape({2, 1}), shape({2, 1})));
}

TEST(shape, corner_enumeration) {
  const auto ups = seqrank::add_corner_shapes(shape({2, 1}));
  EXPECT_EQ(ups, (std::vector<shape>{shape({3, 1}), shape({2, 2}),
                                     shape({2, 1, 1})}));
  const auto downs = seqrank::remove_corner_shapes(shape({2, 1}));
  EXPECT_EQ(downs, (std::vector<shape>{shape({1, 1}), shape({2})}));
  EXPECT_EQ(seqrank::add_corner_shapes(shape()),
            std::vector<shape>{shape({1})});
  EXPECT_TRUE(seqrank::remove_corner_shapes(shape()).empty());
}

TEST(all_shapes, partition_counts) {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 0; n <= 8; ++n)
    EXPECT_EQ(all_shapes(n).size(), expected[n]) << "n=" << n;
}

TEST(all_standard_tableaux, counts_match_hook_lengths) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& sh : all_shapes(n))
      EXPECT_EQ(all_standard_tableaux(sh).size(),
                oracles::hook_length_count(sh.rows()));
  const std::size_t totals[] = {1, 2, 4, 10, 26, 76, 232, 764};
  std::size_t running = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    running += totals[n - 1];
    EXPECT_EQ(seqrank::all_standard_tableaux_up_to(n).size(), running);
  }
}

TEST(standard_tableau, validation) {
  EXPECT_THROW(standard_tableau(shape({2, 2}), {{1, 2}, {4, 3}}),
               seqrank::invalid_tableau_error);
  EXPECT_THROW(standard_tableau(shape({2}), {{1, 1}}),
               seqrank::invalid_tableau_error);
  EXPECT_THROW(standard_tableau(shape({2, 1}), {{1, 3}}),
               seqrank::invalid_tableau_error);
  EXPECT_THROW(standard_tableau(shape({2}), {{2, 3}}),
               seqrank::invalid_tableau_error);
  EXPECT_THROW(standard_tableau(shape({1, 1}), {{2}, {1}}),
               seqrank::invalid_tableau_error);
}

TEST(real_tableau, validation) {
  using seqrank::real_tableau;
  EXPECT_THROW(real_tableau(shape({2}), {{0.5, 0.5}}),
               seqrank::invalid_tableau_error);
  EXPECT_THROW(real_tableau(shape({1, 1}), {{0.5}, {0.2}}),
               seqrank::invalid_tableau_error);
  EXPECT_NO_THROW(real_tableau(shape({2, 1}), {{0.1, 0.4}, {0.3}}));
}

TEST(intermediates, young_graph_examples) {
  const young_graph g;
  EXPECT_EQ(intermediates(g, shape({1}), shape({2, 1})),
            (std::vector<shape>{shape({2}), shape({1, 1})}));
  EXPECT_EQ(intermediates(g, shape({2}), shape({2, 2})),
            std::vector<shape>{shape({2, 1})});
  EXPECT_EQ(intermediates(g, shape(), shape({1, 1})),
            std::vector<shape>{shape({1})});
  EXPECT_THROW(intermediates(g, shape({1}), shape({2, 2})),
               seqrank::bad_levels_error);
}

TEST(interval_involution, young_graph_examples) {
  const young_graph g;
  EXPECT_EQ(interval_involution(g, shape({1}), shape({2, 1}), shape({1, 1})),
            shape({2}));
  EXPECT_EQ(interval_involution(g, shape({2}), shape({2, 2}), shape({2, 1})),
            shape({2, 1}));
  EXPECT_EQ(interval_involution(g, shape(), shape({1, 1}), shape({1})),
            shape({1}));
  EXPECT_THROW(interval_involution(g, shape({1}), shape({2, 1}), shape({3})),
               seqrank::not_intermediate_error);
}

// Every 2-interval of the Young graph up to level 10 has one or two
// intermediates, and the involution is an involution on each.
TEST(interval_involution, young_graph_involution_up_to_level_10) {
  const young_graph g;
  for (std::size_t level = 0; level + 2 <= 10; ++level) {
    for (const auto& v : all_shapes(level)) {
      for (const auto& w : all_shapes(level + 2)) {
        const auto mids = intermediates(g, v, w);
        if (mids.empty()) continue;
        EXPECT_LE(mids.size(), 2u);
        for (const auto& m : mids)
          EXPECT_EQ(interval_involution(g, v, w,
                                        interval_involution(g, v, w, m)),
                    m);
      }
    }
  }
}

TEST(graph_transfer, young_worked_example) {
  const young_graph g;
  const auto out =
      graph_transfer(g, ypath({{}, {1}, {1, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(out, ypath({{}, {1}, {2}, {2, 1}}));
}

TEST(graph_transfer, monotone_paths) {
  const young_graph g;
  EXPECT_EQ(graph_transfer(g, ypath({{}, {1}, {2}, {3}})),
            ypath({{}, {1}, {2}}));
  EXPECT_EQ(graph_transfer(g, ypath({{}, {1}, {1, 1}, {1, 1, 1}})),
            ypath({{}, {1}, {1, 1}}));
}

TEST(graph_transfer, guards) {
  const young_graph g;
  EXPECT_THROW(graph_transfer(g, ypath({{}, {1}})), seqrank::too_short_error);
  graph_path<shape> bad = ypath({{}, {1}, {3, 1}, {3, 1, 1}});
  EXPECT_THROW(graph_transfer(g, bad), seqrank::invalid_path_error);
}

// Promotion computed by sliding equals the involution transfer carried
// along the tableau's Young-graph path.
TEST(graph_transfer, equals_promotion_up_to_6_cells) {
  const young_graph g;
  for (const auto& t : seqrank::all_standard_tableaux_up_to(6)) {
    if (t.size() < 2) continue;
    EXPECT_EQ(tableau_to_path(seqrank::promotion(t)),
              graph_transfer(g, tableau_to_path(t)));
  }
}

// The output at level k is a function of (u_{k-1}, v_k, v_{k+1}) alone:
// recomputing from any path that agrees there gives the same vertex.
TEST(graph_transfer, markov_property) {
  const young_graph g;
  const auto p = ypath({{}, {1}, {1, 1}, {2, 1}, {2, 2}, {3, 2}});
  const auto out = graph_transfer(g, p);
  for (std::size_t k = 2; k + 1 < p.vertices.size(); ++k) {
    EXPECT_EQ(out.vertices[k],
              interval_involution(g, out.vertices[k - 1], p.vertices[k + 1],
                                  p.vertices[k]));
  }
}

TEST(general_transfer, involution_rule_reproduces_graph_transfer) {
  const young_graph g;
  const auto p = ypath({{}, {1}, {1, 1}, {2, 1}, {2, 2}});
  const auto via_rule = seqrank::general_transfer(
      g, p,
      [&](const graph_path<shape>& path, std::size_t k, const shape& prev) {
        if (k == 1) return path.vertices[1];
        return interval_involution(g, prev, path.vertices[k + 1],
                                   path.vertices[k]);
      });
  EXPECT_EQ(via_rule, graph_transfer(g, p));
}

TEST(general_transfer, identity_rule_on_stationary_graph_is_the_shift) {
  // Stationary graph: one root, then a fixed 3-letter alphabet per level
  // with complete covers; a path is an arbitrary letter word.
  std::vector<std::vector<std::string>> levels{
      {"root"}, {"a", "b", "c"}, {"a", "b", "c"}, {"a", "b", "c"}};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> covers;
  covers.push_back({{0, 0}, {0, 1}, {0, 2}});
  for (int l = 0; l < 2; ++l) {
    std::vector<std::pair<std::size_t, std::size_t>> complete;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) complete.emplace_back(i, j);
    covers.push_back(std::move(complete));
  }
  const explicit_graph<std::string> g(levels, covers);
  using vid = explicit_graph<std::string>::vertex_id;
  graph_path<vid> p;  // root, b, a, c
  p.vertices = {{0, 0}, {1, 1}, {2, 0}, {3, 2}};
  const auto out = seqrank::general_transfer(
      g, p, [&](const graph_path<vid>& path, std::size_t k, const vid&) {
        return vid{k, path.vertices[k + 1].index};
      });
  ASSERT_EQ(out.vertices.size(), 3u);
  EXPECT_EQ(g.label(out.vertices[1]), "a");
  EXPECT_EQ(g.label(out.vertices[2]), "c");
}

TEST(general_transfer, rejects_rule_breaking_the_covering) {
  const young_graph g;
  const auto p = ypath({{}, {1}, {2}, {3}, {4}});
  EXPECT_THROW(
      seqrank::general_transfer(
          g, p,
          [&](const graph_path<shape>& path, std::size_t k, const shape&) {
            if (k == 3) return shape({1, 1, 1});  // not above (2)
            return path.vertices[k];
          }),
      seqrank::rule_violation_error);
  EXPECT_THROW(
      seqrank::general_transfer(
          g, p,
          [&](const graph_path<shape>&, std::size_t, const shape& prev) {
            return prev;  // wrong level
          }),
      seqrank::rule_violation_error);
}

TEST(graph_transfer, too_many_intermediates_detected) {
  std::vector<std::vector<std::string>> levels{
      {"r"}, {"a"}, {"b1", "b2", "b3"}, {"c"}};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> covers{
      {{0, 0}},
      {{0, 0}, {0, 1}, {0, 2}},
      {{0, 0}, {1, 0}, {2, 0}}};
  const explicit_graph<std::string> g(levels, covers);
  using vid = explicit_graph<std::string>::vertex_id;
  graph_path<vid> p;
  p.vertices = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  EXPECT_THROW(graph_transfer(g, p), seqrank::too_many_intermediates_error);
}

TEST(tableau_to_path, worked_examples_and_round_trip) {
  const standard_tableau t(shape({2, 2}), {{1, 3}, {2, 4}});
  EXPECT_EQ(tableau_to_path(t), ypath({{}, {1}, {1, 1}, {2, 1}, {2, 2}}));
  const standard_tableau row(shape({3}), {{1, 2, 3}});
  EXPECT_EQ(tableau_to_path(row), ypath({{}, {1}, {2}, {3}}));
  for (const auto& tab : seqrank::all_standard_tableaux_up_to(6))
    EXPECT_EQ(seqrank::path_to_tableau(tableau_to_path(tab)), tab);
}

TEST(path_to_tableau, rejects_invalid_paths) {
  EXPECT_THROW(seqrank::path_to_tableau(ypath({{}, {2}})),
               seqrank::invalid_path_error);
  EXPECT_THROW(seqrank::path_to_tableau(ypath({{1}, {2}})),
               seqrank::invalid_path_error);
  EXPECT_THROW(seqrank::path_to_tableau(graph_path<shape>{}),
               seqrank::invalid_path_error);
}

TEST(truncate, young_and_tree_level_sizes) {
  const auto young = truncate(young_graph{}, shape(), 6);
  const std::size_t partition_counts[] = {1, 1, 2, 3, 5, 7, 11};
  ASSERT_EQ(young.num_levels(), 7u);
  for (std::size_t l = 0; l <= 6; ++l)
    EXPECT_EQ(young.level_labels()[l].size(), partition_counts[l]);

  const auto tree = truncate(permutation_tree{}, rank_vector(), 4);
  const std::size_t factorials[] = {1, 1, 2, 6, 24};
  ASSERT_EQ(tree.num_levels(), 5u);
  for (std::size_t l = 0; l <= 4; ++l)
    EXPECT_EQ(tree.level_labels()[l].size(), factorials[l]);
}

TEST(permutation_tree, neighbors_trace_prefix_growth) {
  const permutation_tree g;
  const auto ups = g.up_neighbors(rank_vector({1, 0}));
  EXPECT_EQ(ups, (std::vector<rank_vector>{rank_vector({2, 1, 0}),
                                           rank_vector({2, 0, 1}),
                                           rank_vector({1, 0, 2})}));
  EXPECT_EQ(g.down_neighbors(rank_vector({1, 0})),
            std::vector<rank_vector>{rank_vector({0})});
  EXPECT_EQ(g.down_neighbors(rank_vector({0})),
            std::vector<rank_vector>{rank_vector()});
  EXPECT_TRUE(g.down_neighbors(rank_vector()).empty());
}

TEST(explicit_graph, validation) {
  using G = explicit_graph<std::string>;
  EXPECT_THROW(G({{"a", "b"}}, {}), seqrank::bad_levels_error);
  EXPECT_THROW(G({{"r"}, {"a"}}, {}), seqrank::bad_levels_error);
  EXPECT_THROW(G({{"r"}, {"a"}}, {{{0, 5}}}), seqrank::bad_levels_error);
  EXPECT_THROW(G({{"r"}, {"a", "b"}}, {{{0, 0}}}), seqrank::bad_levels_error);
  const G ok({{"r"}, {"a", "b"}}, {{{0, 0}, {0, 1}}});
  EXPECT_THROW(ok.label({2, 0}), seqrank::bad_levels_error);
  EXPECT_EQ(ok.up_neighbors(ok.root()).size(), 2u);
}

TEST(tail_equivalent, examples) {
  const auto p = ypath({{}, {1}, {2}, {2, 1}});
  auto q = p;
  EXPECT_TRUE(seqrank::tail_equivalent(p, q, 0));
  q.vertices[1] = shape({1});  // unchanged; now alter level 1 only
  auto r = ypath({{}, {1}, {1, 1}, {2, 1}});
  EXPECT_TRUE(seqrank::tail_equivalent(p, r, 2));
  EXPECT_FALSE(seqrank::tail_equivalent(p, r, 1));
  auto s = ypath({{}, {1}, {2}, {3}});
  EXPECT_FALSE(seqrank::tail_equivalent(p, s, 2));
  EXPECT_THROW(seqrank::tail_equivalent(p, ypath({{}, {1}}), 0),
               seqrank::length_mismatch_error);
}

TEST(validate_path, young_graph_checks) {
  const young_graph g;
  EXPECT_NO_THROW(seqrank::validate_path(g, ypath({{}, {1}, {1, 1}})));
  EXPECT_THROW(seqrank::validate_path(g, ypath({{1}, {1, 1}})),
               seqrank::invalid_path_error);
  EXPECT_THROW(seqrank::validate_path(g, ypath({{}, {1}, {3}})),
               seqrank::invalid_path_error);
}

}  // namespace
