// Command-line front end: sequential-rank coding, transfers, RSK,
// promotion, graph utilities, sampling and reproducible experiments.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqrank/seqrank.hpp"

namespace {

std::string read_stdin_all() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

// Whitespace- or newline-separated decimal literals, parsed locale-free.
std::vector<double> parse_real_stream(const std::string& text) {
  std::vector<double> out;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p < end) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p >= end) break;
    double v = 0.0;
    const auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc{} ||
        (res.ptr < end && !std::isspace(static_cast<unsigned char>(*res.ptr))))
      throw seqrank::invalid_value_error(
          std::string("not a decimal literal: \"") +
          std::string(p, std::min<std::size_t>(16, end - p)) + "...\"");
    out.push_back(v);
    p = res.ptr;
  }
  return out;
}

template <typename Fn>
void for_each_record(Fn&& fn) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(seqrank::json::parse(line));
  }
}

struct options {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::int64_t steps = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::int64_t trials = -1;
  std::int64_t samples = -1;
  std::string measure = "uniform";
  std::string emit;
  std::string out_dir = ".";
  std::string experiment_name;
};

int cmd_encode(const options& opt) {
  const std::vector<double> x = parse_real_stream(read_stdin_all());
  if (opt.n >= 0 && static_cast<std::size_t>(opt.n) != x.size())
    throw seqrank::length_mismatch_error(
        "--n is " + std::to_string(opt.n) + " but " +
        std::to_string(x.size()) + " values were read");
  std::cout << seqrank::code_to_json(seqrank::encode_prefix(x)).dump() << '\n';
  return 0;
}

int cmd_transfer(const options& opt) {
  for_each_record([&](const seqrank::json& j) {
    seqrank::tri_code t = seqrank::parse_code(j);
    for (std::int64_t s = 0; s < opt.steps; ++s) t = seqrank::transfer(t);
    std::cout << seqrank::code_to_json(t).dump() << '\n';
  });
  return 0;
}

int cmd_reconstruct(const options& opt) {
  for_each_record([&](const seqrank::json& j) {
    const seqrank::tri_code t = seqrank::parse_code(j);
    const std::size_t m =
        opt.m >= 0 ? static_cast<std::size_t>(opt.m) : t.size();
    const std::vector<double> x = seqrank::reconstruct_prefix(t, m);
    std::cout << seqrank::prefix_to_json(x).dump() << '\n';
  });
  return 0;
}

int cmd_rsk(const options& opt) {
  const std::vector<double> x = parse_real_stream(read_stdin_all());
  if (opt.n >= 0 && static_cast<std::size_t>(opt.n) != x.size())
    throw seqrank::length_mismatch_error(
        "--n is " + std::to_string(opt.n) + " but " +
        std::to_string(x.size()) + " values were read");
  const seqrank::rsk_pair pq = seqrank::rsk_word(x);
  seqrank::json j = {{"P", seqrank::tableau_to_json(pq.p)},
                     {"Q", seqrank::tableau_to_json(pq.q)}};
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_promote(const options&) {
  for_each_record([&](const seqrank::json& j) {
    const seqrank::standard_tableau t = seqrank::parse_standard_tableau(j);
    std::cout << seqrank::tableau_to_json(seqrank::promotion(t)).dump()
              << '\n';
  });
  return 0;
}

int cmd_graph_transfer(const options& opt) {
  if (!opt.emit.empty()) {
    const std::size_t depth = opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 6;
    if (opt.emit == "young") {
      const auto g =
          seqrank::truncate(seqrank::young_graph{}, seqrank::shape(), depth);
      std::cout << seqrank::graph_to_json(g).dump() << '\n';
    } else {
      const auto g = seqrank::truncate(seqrank::permutation_tree{},
                                       seqrank::rank_vector(), depth);
      std::cout << seqrank::graph_to_json(g).dump() << '\n';
    }
    return 0;
  }
  for_each_record([&](const seqrank::json& j) {
    const seqrank::graph_path<seqrank::shape> p = seqrank::parse_shape_path(j);
    const auto out = seqrank::graph_transfer(seqrank::young_graph{}, p);
    std::cout << seqrank::path_to_json(out).dump() << '\n';
  });
  return 0;
}

int cmd_sample(const options& opt) {
  const std::size_t n = static_cast<std::size_t>(opt.n);
  const std::size_t count =
      opt.samples >= 0 ? static_cast<std::size_t>(opt.samples) : 1;
  seqrank::rng gen(opt.seed);
  for (std::size_t s = 0; s < count; ++s) {
    if (opt.measure == "plancherel") {
      const seqrank::shape sh = seqrank::plancherel_sample(n, gen);
      seqrank::json j = {{"n", n}, {"shape", sh.rows()}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout
          << seqrank::code_to_json(seqrank::sample_uniform_tricode(n, gen))
                 .dump()
          << '\n';
    }
  }
  return 0;
}

int cmd_experiment(const options& opt) {
  const std::string& name = opt.experiment_name;
  seqrank::experiment_report report;
  if (name == "distinguishability") {
    const std::size_t N = opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 10000;
    const std::size_t trials =
        opt.trials >= 0 ? static_cast<std::size_t>(opt.trials) : 100;
    report = seqrank::run_distinguishability(N, trials, opt.seed);
  } else if (name == "uniformity") {
    const std::size_t n = opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 20;
    const std::size_t samples =
        opt.samples >= 0 ? static_cast<std::size_t>(opt.samples) : 100000;
    report = seqrank::run_uniformity(n, samples, opt.seed);
  } else if (name == "entropy") {
    const std::size_t n_max =
        opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 10000;
    report = seqrank::run_entropy_curve(n_max);
  } else if (name == "rsk-separation") {
    const std::size_t N = opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 50;
    const std::size_t pairs =
        opt.trials >= 0 ? static_cast<std::size_t>(opt.trials) : 1000;
    report = seqrank::run_rsk_separation(N, pairs, opt.seed);
  } else if (name == "p-stabilization") {
    const std::size_t N = opt.n >= 0 ? static_cast<std::size_t>(opt.n) : 10000;
    const std::size_t trials =
        opt.trials >= 0 ? static_cast<std::size_t>(opt.trials) : 50;
    report = seqrank::run_p_stabilization(N, trials, opt.seed);
  } else {
    std::cerr << "unknown experiment \"" << name
              << "\" (expected distinguishability, uniformity, entropy, "
                 "rsk-separation or p-stabilization)\n";
    return 1;
  }
  const auto [csv_path, json_path] = seqrank::write_report(report, opt.out_dir);
  std::cout << csv_path.string() << '\n' << json_path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  options opt;
  CLI::App app{"sequential-rank codes, transfers, RSK and graded graphs"};
  app.require_subcommand(1);

  auto* encode = app.add_subcommand(
      "encode", "read reals from stdin, print their sequential-rank code");
  encode->add_option("--n", opt.n, "expected number of input values");

  auto* transfer = app.add_subcommand(
      "transfer", "apply the shift on codes to JSONL code records");
  transfer->add_option("--steps", opt.steps, "number of shifts (default 1)")
      ->check(CLI::NonNegativeNumber);

  auto* reconstruct = app.add_subcommand(
      "reconstruct", "estimate leading coordinates from JSONL code records");
  reconstruct->add_option("--m", opt.m,
                          "number of coordinates (default: all)");

  auto* rsk = app.add_subcommand(
      "rsk", "read reals from stdin, print insertion and recording tableaux");
  rsk->add_option("--n", opt.n, "expected number of input values");

  app.add_subcommand("promote",
                     "apply promotion to JSONL standard-tableau records");

  auto* graph = app.add_subcommand(
      "graph-transfer",
      "apply the 2-interval involution transfer to JSONL Young-graph paths");
  graph->add_option("--emit", opt.emit,
                    "emit a graph truncation instead of transforming paths")
      ->check(CLI::IsMember({"young", "tree"}));
  graph->add_option("--n", opt.n, "levels for --emit (default 6)");

  auto* sample =
      app.add_subcommand("sample", "draw codes or Plancherel shapes");
  sample->add_option("--n", opt.n, "object size")->required();
  sample->add_option("--seed", opt.seed, "random seed")->required();
  sample->add_option("--samples", opt.samples, "number of draws (default 1)");
  sample->add_option("--measure", opt.measure, "uniform (codes) or plancherel")
      ->check(CLI::IsMember({"uniform", "plancherel"}));

  auto* experiment = app.add_subcommand(
      "experiment", "run a seeded experiment and write CSV + JSON reports");
  experiment->add_option("name", opt.experiment_name, "experiment name")
      ->required();
  auto* seed_opt =
      experiment->add_option("--seed", opt.seed, "random seed");
  experiment->add_option("--n", opt.n, "size parameter");
  experiment->add_option("--trials", opt.trials, "number of trials/pairs");
  experiment->add_option("--samples", opt.samples, "number of samples");
  experiment->add_option("--out", opt.out_dir,
                         "output directory (default: current)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  opt.seed_given = seed_opt->count() > 0;
  if (experiment->parsed() && !opt.seed_given &&
      opt.experiment_name != "entropy") {
    std::cerr << "experiment \"" << opt.experiment_name
              << "\" is randomized; --seed is required\n";
    return 1;
  }

  try {
    if (encode->parsed()) return cmd_encode(opt);
    if (transfer->parsed()) return cmd_transfer(opt);
    if (reconstruct->parsed()) return cmd_reconstruct(opt);
    if (rsk->parsed()) return cmd_rsk(opt);
    if (app.get_subcommand("promote")->parsed()) return cmd_promote(opt);
    if (graph->parsed()) return cmd_graph_transfer(opt);
    if (sample->parsed()) return cmd_sample(opt);
    if (experiment->parsed()) return cmd_experiment(opt);
    return 1;
  } catch (const seqrank::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad record: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
