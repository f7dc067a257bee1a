#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "seqrank/io.hpp"

namespace {

namespace fs = std::filesystem;

struct cli_result {
  int exit_code;
  std::string out;
};

// Runs the installed binary with `args`, feeding `input` on stdin and
// capturing stdout; stderr is discarded.
cli_result run_cli(const std::string& args, const std::string& input = "") {
  static int counter = 0;
  const fs::path in_path =
      fs::temp_directory_path() /
      ("seqrank_cli_in_" + std::to_string(::getpid()) + "_" +
       std::to_string(counter++) + ".txt");
  {
    std::ofstream f(in_path, std::ios::binary);
    f << input;
  }
  const std::string cmd = std::string(SEQRANK_CLI_PATH) + " " + args + " < " +
                          in_path.string() + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    out.append(buf, got);
  const int status = ::pclose(pipe);
  fs::remove(in_path);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(cli_encode, worked_example) {
  const auto r = run_cli("encode", "0.5 0.2 0.7 0.6\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"n\":4,\"t\":[1,1,3,3]}\n");
}

TEST(cli_encode, data_errors_exit_2) {
  EXPECT_EQ(run_cli("encode", "0.5 0.5\n").exit_code, 2);
  EXPECT_EQ(run_cli("encode", "0.5 pear\n").exit_code, 2);
  EXPECT_EQ(run_cli("encode --n 3", "0.5 0.2 0.7 0.6\n").exit_code, 2);
}

TEST(cli_usage, errors_exit_1) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("bogus").exit_code, 1);
  EXPECT_EQ(run_cli("encode --bogus").exit_code, 1);
  EXPECT_EQ(run_cli("sample --n 5").exit_code, 1);
  EXPECT_EQ(run_cli("sample --seed 1").exit_code, 1);
  EXPECT_EQ(run_cli("transfer --steps -1").exit_code, 1);
  EXPECT_EQ(run_cli("sample --n 5 --seed 1 --measure exotic").exit_code, 1);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(cli_transfer, shifts_code_records) {
  const auto r = run_cli("transfer", "{\"n\":4,\"t\":[1,1,3,3]}\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"n\":3,\"t\":[1,2,2]}\n");
  const auto r2 = run_cli("transfer --steps 2", "{\"n\":4,\"t\":[1,1,3,3]}\n");
  EXPECT_EQ(r2.out, "{\"n\":2,\"t\":[1,1]}\n");
  const auto r0 = run_cli("transfer --steps 0", "{\"n\":4,\"t\":[1,1,3,3]}\n");
  EXPECT_EQ(r0.out, "{\"n\":4,\"t\":[1,1,3,3]}\n");
}

TEST(cli_transfer, record_stream_with_blank_lines) {
  const auto r = run_cli(
      "transfer", "{\"n\":2,\"t\":[1,2]}\n\n{\"n\":2,\"t\":[1,1]}\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"n\":1,\"t\":[1]}\n{\"n\":1,\"t\":[1]}\n");
}

TEST(cli_transfer, bad_records_exit_2) {
  EXPECT_EQ(run_cli("transfer", "not json\n").exit_code, 2);
  EXPECT_EQ(run_cli("transfer", "{\"n\":2,\"t\":[2,1]}\n").exit_code, 2);
}

TEST(cli_pipes, encode_then_transfer_matches_encode_of_shifted_stream) {
  const std::string stream =
      "0.62 0.11 0.83 0.47 0.29 0.95 0.54 0.08 0.71 0.36 0.19 0.88";
  const std::string shifted = stream.substr(5);
  const auto full = run_cli("encode", stream);
  ASSERT_EQ(full.exit_code, 0);
  const auto piped = run_cli("transfer", full.out);
  const auto direct = run_cli("encode", shifted);
  ASSERT_EQ(piped.exit_code, 0);
  EXPECT_EQ(piped.out, direct.out);
}

TEST(cli_reconstruct, plotting_positions) {
  const auto r = run_cli("reconstruct", "{\"n\":3,\"t\":[1,2,3]}\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"n\":3,\"x\":[0.25,0.5,0.75]}\n");
  const auto r2 = run_cli("reconstruct --m 2", "{\"n\":3,\"t\":[1,2,3]}\n");
  EXPECT_EQ(r2.out, "{\"n\":2,\"x\":[0.25,0.5]}\n");
  EXPECT_EQ(run_cli("reconstruct --m 9", "{\"n\":3,\"t\":[1,2,3]}\n")
                .exit_code,
            2);
}

TEST(cli_rsk, worked_example) {
  const auto r = run_cli("rsk", "0.5 0.2 0.7 0.6\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"P\":{\"shape\":[2,2],\"rows\":[[0.2,0.6],[0.5,0.7]]},"
            "\"Q\":{\"shape\":[2,2],\"rows\":[[1,3],[2,4]]}}\n");
}

TEST(cli_promote, worked_example_and_guard) {
  const auto r =
      run_cli("promote", "{\"shape\":[2,2],\"rows\":[[1,3],[2,4]]}\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"shape\":[2,1],\"rows\":[[1,2],[3]]}\n");
  EXPECT_EQ(run_cli("promote", "{\"shape\":[1],\"rows\":[[1]]}\n").exit_code,
            2);
}

TEST(cli_graph_transfer, transforms_paths) {
  const auto r = run_cli("graph-transfer",
                         "{\"path\":[[],[1],[1,1],[2,1],[2,2]]}\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"path\":[[],[1],[2],[2,1]]}\n");
  EXPECT_EQ(run_cli("graph-transfer", "{\"path\":[[],[2]]}\n").exit_code, 2);
}

TEST(cli_graph_transfer, emits_truncations) {
  const auto r = run_cli("graph-transfer --emit young --n 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"levels\":[[[]],[[1]],[[2],[1,1]]],"
            "\"covers\":[[[0,0]],[[0,0],[0,1]]]}\n");
  const auto t = run_cli("graph-transfer --emit tree --n 3");
  ASSERT_EQ(t.exit_code, 0);
  const auto j = seqrank::json::parse(t.out);
  ASSERT_EQ(j["levels"].size(), 4u);
  EXPECT_EQ(j["levels"][2].size(), 2u);
  EXPECT_EQ(j["levels"][3].size(), 6u);
}

TEST(cli_sample, deterministic_code_records) {
  const auto a = run_cli("sample --n 6 --seed 3 --samples 5");
  const auto b = run_cli("sample --n 6 --seed 3 --samples 5");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run_cli("sample --n 6 --seed 4 --samples 5").out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto code = seqrank::parse_code(seqrank::json::parse(line));
    EXPECT_EQ(code.size(), 6u);
    ++count;
  }
  EXPECT_EQ(count, 5);
}

TEST(cli_sample, plancherel_shape_records) {
  const auto r = run_cli("sample --n 4 --seed 9 --samples 3 "
                         "--measure plancherel");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = seqrank::json::parse(line);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(seqrank::parse_shape(j["shape"]).size(), 4u);
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(cli_experiment, entropy_writes_reports_without_seed) {
  const fs::path dir = fs::temp_directory_path() / "seqrank_cli_entropy";
  fs::remove_all(dir);
  const auto r =
      run_cli("experiment entropy --n 100 --out " + dir.string());
  ASSERT_EQ(r.exit_code, 0);
  const fs::path csv = dir / "entropy-0.csv";
  const fs::path json_file = dir / "entropy-0.json";
  EXPECT_NE(r.out.find(csv.string()), std::string::npos);
  EXPECT_NE(r.out.find(json_file.string()), std::string::npos);
  ASSERT_TRUE(fs::exists(csv));
  ASSERT_TRUE(fs::exists(json_file));
  const std::string body = slurp(csv);
  EXPECT_EQ(body.substr(0, body.find('\n')), "n,h_over_n");
  fs::remove_all(dir);
}

TEST(cli_experiment, randomized_names_require_seed) {
  EXPECT_EQ(run_cli("experiment rsk-separation").exit_code, 1);
  EXPECT_EQ(run_cli("experiment uniformity").exit_code, 1);
  EXPECT_EQ(run_cli("experiment distinguishability").exit_code, 1);
  EXPECT_EQ(run_cli("experiment p-stabilization").exit_code, 1);
  EXPECT_EQ(run_cli("experiment nonsense --seed 1").exit_code, 1);
}

TEST(cli_experiment, uniformity_report_shape) {
  const fs::path dir = fs::temp_directory_path() / "seqrank_cli_unif";
  fs::remove_all(dir);
  const auto r = run_cli(
      "experiment uniformity --n 3 --samples 200 --seed 5 --out " +
      dir.string());
  ASSERT_EQ(r.exit_code, 0);
  const std::string body = slurp(dir / "uniformity-5.csv");
  EXPECT_EQ(body.substr(0, body.find('\n')),
            "kind,i,j,statistic,df,p_value");
  fs::remove_all(dir);
}

}  // namespace
