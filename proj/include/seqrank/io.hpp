#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "seqrank/errors.hpp"
#include "seqrank/experiments.hpp"
#include "seqrank/graph.hpp"
#include "seqrank/tableau.hpp"
#include "seqrank/types.hpp"

namespace seqrank {

// ordered_json keeps insertion order, so records always print "n" first.
using json = nlohmann::ordered_json;

inline json code_to_json(const tri_code& t) {
  return {{"n", t.size()}, {"t", t.values()}};
}

inline json prefix_to_json(std::span<const double> x) {
  return {{"n", x.size()}, {"x", std::vector<double>(x.begin(), x.end())}};
}

inline json ranks_to_json(const rank_vector& k) {
  return {{"n", k.size()}, {"k", k.values()}};
}

inline json tableau_to_json(const standard_tableau& t) {
  return {{"shape", t.get_shape().rows()}, {"rows", t.rows()}};
}

inline json tableau_to_json(const real_tableau& t) {
  return {{"shape", t.get_shape().rows()}, {"rows", t.rows()}};
}

namespace detail {

template <typename E>
const json& require_field(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw E(std::string("record is missing field \"") + field + '"');
  return j.at(field);
}

template <typename E, typename T>
std::vector<T> int_array(const json& arr, const char* what) {
  if (!arr.is_array()) throw E(std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw E(std::string(what) + " must hold integers");
    out.push_back(v.get<T>());
  }
  return out;
}

template <typename E>
void check_length(const json& j, std::size_t got, const char* what) {
  const json& n = require_field<E>(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 0 ||
      n.get<std::uint64_t>() != got)
    throw E(std::string("field \"n\" does not match the length of ") + what);
}

}  // namespace detail

inline tri_code parse_code(const json& j) {
  using E = malformed_code_error;
  auto t = detail::int_array<E, int>(detail::require_field<E>(j, "t"), "\"t\"");
  detail::check_length<E>(j, t.size(), "\"t\"");
  return tri_code(std::move(t));
}

inline std::vector<double> parse_prefix(const json& j) {
  using E = invalid_value_error;
  const json& arr = detail::require_field<E>(j, "x");
  if (!arr.is_array()) throw E("\"x\" must be an array");
  std::vector<double> x;
  x.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw E("\"x\" must hold numbers");
    x.push_back(v.get<double>());
  }
  detail::check_length<E>(j, x.size(), "\"x\"");
  return x;
}

inline rank_vector parse_ranks(const json& j) {
  using E = not_a_permutation_error;
  auto k = detail::int_array<E, int>(detail::require_field<E>(j, "k"), "\"k\"");
  detail::check_length<E>(j, k.size(), "\"k\"");
  return rank_vector(std::move(k));
}

inline shape parse_shape(const json& arr) {
  auto rows = detail::int_array<invalid_shape_error, int>(arr, "shape");
  return rows.empty() ? shape() : shape(std::move(rows));
}

inline standard_tableau parse_standard_tableau(const json& j) {
  using E = invalid_tableau_error;
  shape sh = parse_shape(detail::require_field<E>(j, "shape"));
  const json& arr = detail::require_field<E>(j, "rows");
  if (!arr.is_array()) throw E("\"rows\" must be an array of arrays");
  std::vector<std::vector<int>> rows;
  rows.reserve(arr.size());
  for (const auto& row : arr)
    rows.push_back(detail::int_array<E, int>(row, "tableau row"));
  return standard_tableau(std::move(sh), std::move(rows));
}

inline real_tableau parse_real_tableau(const json& j) {
  using E = invalid_tableau_error;
  shape sh = parse_shape(detail::require_field<E>(j, "shape"));
  const json& arr = detail::require_field<E>(j, "rows");
  if (!arr.is_array()) throw E("\"rows\" must be an array of arrays");
  std::vector<std::vector<double>> rows;
  rows.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array()) throw E("tableau row must be an array");
    std::vector<double> vals;
    vals.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number()) throw E("tableau row must hold numbers");
      vals.push_back(v.get<double>());
    }
    rows.push_back(std::move(vals));
  }
  return real_tableau(std::move(sh), std::move(rows));
}

/// {"path": [[], [1], [1,1], ...]} as a Young-graph path of shapes.
inline graph_path<shape> parse_shape_path(const json& j) {
  using E = invalid_path_error;
  const json& arr = detail::require_field<E>(j, "path");
  if (!arr.is_array()) throw E("\"path\" must be an array of shapes");
  graph_path<shape> p;
  p.vertices.reserve(arr.size());
  for (const auto& v : arr) p.vertices.push_back(parse_shape(v));
  return p;
}

inline json path_to_json(const graph_path<shape>& p) {
  json arr = json::array();
  for (const shape& s : p.vertices) arr.push_back(s.rows());
  return {{"path", arr}};
}

namespace detail {

inline json label_to_json(const shape& s) { return s.rows(); }
inline json label_to_json(const rank_vector& k) { return k.values(); }

}  // namespace detail

/// {"levels": [[label...]...], "covers": [[[from,to]...]...]} with labels
/// serialized per vertex kind (row lengths for shapes, ranks for tree
/// vertices).
template <typename L>
json graph_to_json(const explicit_graph<L>& g) {
  json levels = json::array();
  for (const auto& level : g.level_labels()) {
    json row = json::array();
    for (const L& v : level) row.push_back(detail::label_to_json(v));
    levels.push_back(std::move(row));
  }
  json covers = json::array();
  for (const auto& edges : g.cover_edges()) {
    json level = json::array();
    for (const auto& [from, to] : edges)
      level.push_back(json::array({from, to}));
    covers.push_back(std::move(level));
  }
  return {{"levels", std::move(levels)}, {"covers", std::move(covers)}};
}

inline json report_to_json(const experiment_report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json cells = json::array();
    for (const report_cell& c : row) {
      if (const auto* i = std::get_if<std::int64_t>(&c))
        cells.push_back(*i);
      else if (const auto* d = std::get_if<double>(&c))
        cells.push_back(*d);
      else
        cells.push_back(std::get<std::string>(c));
    }
    rows.push_back(std::move(cells));
  }
  json j = {{"name", r.name},
            {"seed", r.seed},
            {"columns", r.columns},
            {"rows", std::move(rows)},
            {"code_version", r.code_version},
            {"created_at", r.created_at}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Writes <name>-<seed>.csv and <name>-<seed>.json into out_dir and returns
/// both paths. The CSV is a pure function of the rows; the JSON adds
/// metadata.
inline std::pair<std::filesystem::path, std::filesystem::path> write_report(
    const experiment_report& r, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string base = r.name + "-" + std::to_string(r.seed);
  const auto csv_path = out_dir / (base + ".csv");
  const auto json_path = out_dir / (base + ".json");
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw bad_params_error("cannot open " + csv_path.string());
    csv << to_csv(r);
  }
  {
    std::ofstream js(json_path, std::ios::binary);
    if (!js) throw bad_params_error("cannot open " + json_path.string());
    js << report_to_json(r).dump(2) << '\n';
  }
  return {csv_path, json_path};
}

}  // namespace seqrank
