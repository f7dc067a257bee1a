#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/rng.hpp"
#include "seqrank/rsk.hpp"
#include "seqrank/stats.hpp"
#include "seqrank/triangular.hpp"
#include "seqrank/version.hpp"

namespace seqrank {

using report_cell = std::variant<std::int64_t, double, std::string>;

/// Seeded, reproducible experiment output. Rows are a pure function of
/// (name, seed, parameters); only created_at varies between runs, so the
/// CSV rendering (which omits it) is byte-identical across reruns.
struct experiment_report {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<report_cell>> rows;
  std::string note;
  std::string code_version;
  std::string created_at;
};

namespace detail {

inline std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

inline experiment_report make_report(std::string name, std::uint64_t seed,
                                     std::vector<std::string> columns,
                                     std::string note = {}) {
  experiment_report r;
  r.name = std::move(name);
  r.seed = seed;
  r.columns = std::move(columns);
  r.note = std::move(note);
  r.code_version = version;
  r.created_at = iso_utc_now();
  return r;
}

inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void append_csv_cell(std::string& out, const report_cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) {
    out += std::to_string(*i);
  } else if (const auto* d = std::get_if<double>(&c)) {
    out += format_double(*d);
  } else {
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) {
      out += s;
    } else {
      out += '"';
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
  }
}

}  // namespace detail

/// CSV rendering: mandatory header row, one line per record, no metadata.
inline std::string to_csv(const experiment_report& r) {
  std::string out;
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (c) out += ',';
    out += r.columns[c];
  }
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      detail::append_csv_cell(out, row[c]);
    }
    out += '\n';
  }
  return out;
}

/// Per-trial reconstruction errors at three prefix lengths plus, for an
/// independent second stream, the first position at which the two codes
/// differ (0 when they agree through N). Trial j uses substreams 2j and
/// 2j+1 of the seed.
inline experiment_report run_distinguishability(std::size_t N,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (N < 10 || trials < 1)
    throw bad_params_error("distinguishability needs N >= 10, trials >= 1");
  experiment_report r = detail::make_report(
      "distinguishability", seed, {"kind", "trial", "n", "value"});
  const std::size_t lens[3] = {N / 10, N / 2, N};
  for (std::size_t trial = 1; trial <= trials; ++trial) {
    rng gx(seed, 2 * trial), gy(seed, 2 * trial + 1);
    const std::vector<double> x = sample_distinct_uniform(gx, N);
    const std::vector<double> y = sample_distinct_uniform(gy, N);
    for (std::size_t n : lens) {
      const tri_code t = encode_prefix(std::span(x).subspan(0, n));
      const std::size_t m = std::min<std::size_t>(10, n);
      const std::vector<double> est = reconstruct_prefix(t, m);
      double err = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        err = std::max(err, std::fabs(est[i] - x[i]));
      r.rows.push_back({std::string("recon_error"),
                        static_cast<std::int64_t>(trial),
                        static_cast<std::int64_t>(n), err});
    }
    const tri_code tx = encode_prefix(x), ty = encode_prefix(y);
    std::int64_t first_diff = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (tx.values()[i] != ty.values()[i]) {
        first_diff = static_cast<std::int64_t>(i + 1);
        break;
      }
    r.rows.push_back({std::string("pair_first_diff"),
                      static_cast<std::int64_t>(trial),
                      static_cast<std::int64_t>(N), first_diff});
  }
  return r;
}

/// Streaming tally for the uniformity tests: per-coordinate counts of each
/// code value and contingency tables for chosen coordinate pairs.
class uniformity_accumulator {
 public:
  uniformity_accumulator(std::size_t n,
                         std::vector<std::pair<int, int>> pairs)
      : n_(n), pairs_(std::move(pairs)) {
    if (n_ < 2) throw bad_params_error("uniformity needs n >= 2");
    counts_.resize(n_);
    for (std::size_t i = 1; i <= n_; ++i) counts_[i - 1].assign(i, 0);
    for (const auto& [i, j] : pairs_) {
      if (i < 2 || j <= i || j > static_cast<int>(n_))
        throw bad_params_error("coordinate pair out of range");
      tables_.emplace_back(static_cast<std::size_t>(i),
                           std::vector<long long>(static_cast<std::size_t>(j),
                                                  0));
    }
  }

  void add(const tri_code& t) {
    if (t.size() != n_)
      throw length_mismatch_error("code length does not match accumulator");
    for (std::size_t i = 1; i <= n_; ++i)
      ++counts_[i - 1][static_cast<std::size_t>(t.at(i)) - 1];
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [i, j] = pairs_[p];
      ++tables_[p][static_cast<std::size_t>(t.at(static_cast<std::size_t>(i))) -
                   1][static_cast<std::size_t>(
                          t.at(static_cast<std::size_t>(j))) -
                      1];
    }
    ++samples_;
  }

  long long samples() const { return samples_; }

  /// One row per coordinate (goodness of fit against the uniform law on
  /// {1..i}) and one per chosen pair (independence). Coordinate 1 is
  /// constant, so its test has 0 degrees of freedom and p-value 1.
  experiment_report report(std::uint64_t seed) const {
    if (samples_ == 0) throw bad_params_error("no samples accumulated");
    experiment_report r = detail::make_report(
        "uniformity", seed, {"kind", "i", "j", "statistic", "df", "p_value"},
        "significance floor 0.001: a correct generator clears it per test "
        "with probability 0.999");
    for (std::size_t i = 1; i <= n_; ++i) {
      const std::vector<double> expected(
          i, static_cast<double>(samples_) / static_cast<double>(i));
      const chi_square_result res = chi_square_gof(counts_[i - 1], expected);
      r.rows.push_back({std::string("coordinate"), static_cast<std::int64_t>(i),
                        std::int64_t{0}, res.statistic,
                        static_cast<std::int64_t>(res.df), res.p_value});
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const chi_square_result res = chi_square_independence(tables_[p]);
      r.rows.push_back({std::string("pair"),
                        static_cast<std::int64_t>(pairs_[p].first),
                        static_cast<std::int64_t>(pairs_[p].second),
                        res.statistic, static_cast<std::int64_t>(res.df),
                        res.p_value});
    }
    return r;
  }

 private:
  std::size_t n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<long long>> counts_;
  std::vector<std::vector<std::vector<long long>>> tables_;
  long long samples_ = 0;
};

/// Up to 10 distinct coordinate pairs from {2..n}, drawn from substream 1
/// of the seed (coordinate 1 is constant, so it is never paired).
inline std::vector<std::pair<int, int>> choose_coordinate_pairs(
    std::size_t n, std::uint64_t seed) {
  const std::size_t available = (n - 1) * (n - 2) / 2;
  const std::size_t want = std::min<std::size_t>(10, available);
  rng gen(seed, 1);
  std::set<std::pair<int, int>> chosen;
  while (chosen.size() < want) {
    int i = static_cast<int>(gen.next_int(2, static_cast<std::int64_t>(n)));
    int j = static_cast<int>(gen.next_int(2, static_cast<std::int64_t>(n)));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    chosen.emplace(i, j);
  }
  return {chosen.begin(), chosen.end()};
}

/// Chi-square uniformity of every code coordinate and independence of 10
/// random coordinate pairs, over encoded i.i.d. uniform prefixes.
inline experiment_report run_uniformity(std::size_t n, std::size_t samples,
                                        std::uint64_t seed) {
  if (n < 2 || samples < 1)
    throw bad_params_error("uniformity needs n >= 2, samples >= 1");
  uniformity_accumulator acc(n, choose_coordinate_pairs(n, seed));
  rng gen(seed, 0);
  for (std::size_t s = 0; s < samples; ++s)
    acc.add(encode_prefix(sample_distinct_uniform(gen, n)));
  return acc.report(seed);
}

/// Block entropy per letter of the rank partition at level n: the n!
/// equiprobable blocks give H = ln(n!), accumulated as a compensated log
/// sum so no factorial is ever formed. The curve increases without bound.
inline experiment_report run_entropy_curve(std::size_t n_max) {
  if (n_max < 2) throw bad_params_error("entropy curve needs n_max >= 2");
  experiment_report r =
      detail::make_report("entropy", 0, {"n", "h_over_n"});
  r.rows.push_back({std::int64_t{1}, 0.0});
  double sum = 0.0, comp = 0.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double term = std::log(static_cast<double>(n)) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    r.rows.push_back({static_cast<std::int64_t>(n),
                      sum / static_cast<double>(n)});
  }
  return r;
}

/// For independently sampled pairs of streams: the fraction of pairs whose
/// recording tableaux differ by length n (for every n up to N), the mean
/// error of the first-coordinate estimate d_n/n along the same range (the
/// slow-convergence curve), and the per-pair error at n = N.
inline experiment_report run_rsk_separation(std::size_t N, std::size_t pairs,
                                            std::uint64_t seed) {
  if (N < 2 || pairs < 1)
    throw bad_params_error("rsk separation needs N >= 2, pairs >= 1");
  std::vector<std::int64_t> separated_by(N + 1, 0);
  std::vector<double> err_sum(N + 1, 0.0);
  std::vector<double> err_at_n(pairs);
  for (std::size_t trial = 1; trial <= pairs; ++trial) {
    rng gx(seed, 2 * trial), gy(seed, 2 * trial + 1);
    const std::vector<double> x = sample_distinct_uniform(gx, N);
    const std::vector<double> y = sample_distinct_uniform(gy, N);
    const std::size_t sep = first_q_separation(x, y);
    if (sep != 0)
      for (std::size_t n = sep; n <= N; ++n) ++separated_by[n];
    const special_profile sp = special_positions(encode_prefix(x));
    for (std::size_t n = 1; n <= N; ++n)
      err_sum[n] += std::fabs(static_cast<double>(sp.d[n - 1]) /
                                  static_cast<double>(n) -
                              x[0]);
    err_at_n[trial - 1] = std::fabs(
        static_cast<double>(sp.d[N - 1]) / static_cast<double>(N) - x[0]);
  }
  experiment_report r = detail::make_report("rsk-separation", seed,
                                            {"kind", "trial", "n", "value"});
  for (std::size_t n = 1; n <= N; ++n)
    r.rows.push_back({std::string("q_separated_fraction"), std::int64_t{0},
                      static_cast<std::int64_t>(n),
                      static_cast<double>(separated_by[n]) /
                          static_cast<double>(pairs)});
  for (std::size_t n = 1; n <= N; ++n)
    r.rows.push_back({std::string("mean_x1_abs_error"), std::int64_t{0},
                      static_cast<std::int64_t>(n),
                      err_sum[n] / static_cast<double>(pairs)});
  for (std::size_t trial = 1; trial <= pairs; ++trial)
    r.rows.push_back({std::string("x1_abs_error"),
                      static_cast<std::int64_t>(trial),
                      static_cast<std::int64_t>(N), err_at_n[trial - 1]});
  return r;
}

struct corner_drift_result {
  double normalized;
  double raw;
};

/// Sup-difference between the P-tableaux of x[1..n] and x[1..2n] over the
/// top-left 3x3 cells present in both shapes, for normalized (rank/n) and
/// raw entries. The shape only grows with n, so the common cells are those
/// of the shorter prefix.
inline corner_drift_result corner_drift(std::span<const double> x,
                                        std::size_t n) {
  if (n < 1 || 2 * n > x.size())
    throw bad_params_error("corner drift needs 1 <= n and 2n <= length");
  const real_tableau norm_a = normalized_p(x.subspan(0, n));
  const real_tableau norm_b = normalized_p(x.subspan(0, 2 * n));
  const real_tableau raw_a = rsk_word(x.subspan(0, n)).p;
  const real_tableau raw_b = rsk_word(x.subspan(0, 2 * n)).p;
  corner_drift_result out{0.0, 0.0};
  for (std::size_t r = 0; r < 3 && r < norm_a.rows().size(); ++r) {
    const std::size_t cols =
        std::min<std::size_t>(3, norm_a.rows()[r].size());
    for (std::size_t c = 0; c < cols; ++c) {
      out.normalized = std::max(
          out.normalized, std::fabs(norm_a.at(r, c) - norm_b.at(r, c)));
      out.raw =
          std::max(out.raw, std::fabs(raw_a.at(r, c) - raw_b.at(r, c)));
    }
  }
  return out;
}

/// Corner drift between prefix lengths (n, 2n) at n = N/4 and n = N/2, per
/// trial, for normalized and raw P entries. Normalization is what makes
/// the corner stabilize; the raw entries keep drifting by order-statistic
/// noise on top of the same decay.
inline experiment_report run_p_stabilization(std::size_t N,
                                             std::size_t trials,
                                             std::uint64_t seed) {
  if (N < 20 || trials < 1)
    throw bad_params_error("p stabilization needs N >= 20, trials >= 1");
  experiment_report r = detail::make_report(
      "p-stabilization", seed, {"trial", "n", "normalized_drift", "raw_drift"});
  const std::size_t checkpoints[2] = {N / 4, N / 2};
  for (std::size_t trial = 1; trial <= trials; ++trial) {
    rng gen(seed, trial);
    const std::vector<double> x = sample_distinct_uniform(gen, N);
    for (std::size_t n : checkpoints) {
      const corner_drift_result d = corner_drift(x, n);
      r.rows.push_back({static_cast<std::int64_t>(trial),
                        static_cast<std::int64_t>(n), d.normalized, d.raw});
    }
  }
  return r;
}

}  // namespace seqrank
