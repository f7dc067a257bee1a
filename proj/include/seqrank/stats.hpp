#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "seqrank/errors.hpp"

namespace seqrank {

namespace detail {

/// Regularized lower incomplete gamma by power series; for x < a + 1.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < 2000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

/// Regularized upper incomplete gamma by Lentz continued fraction; for
/// x >= a + 1.
inline double gamma_q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 2000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

/// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    throw bad_params_error("gamma_p needs a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return detail::gamma_p_series(a, x);
  return 1.0 - detail::gamma_q_fraction(a, x);
}

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    throw bad_params_error("gamma_q needs a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_fraction(a, x);
}

/// Upper tail of the chi-square distribution. Zero degrees of freedom mean
/// a fully constrained statistic; the p-value is 1 by convention.
inline double chi_square_pvalue(double statistic, std::size_t df) {
  if (statistic < 0.0) throw bad_params_error("chi-square statistic < 0");
  if (df == 0) return 1.0;
  return gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
}

struct chi_square_result {
  double statistic;
  std::size_t df;
  double p_value;

  friend bool operator==(const chi_square_result&, const chi_square_result&) =
      default;
};

/// Goodness of fit of observed counts against expected counts (same total
/// up to the caller); df = cells - 1.
inline chi_square_result chi_square_gof(std::span<const long long> observed,
                                        std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.empty())
    throw bad_params_error("observed and expected must match and be nonempty");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0)
      throw bad_params_error("expected counts must be positive");
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  const std::size_t df = observed.size() - 1;
  return {stat, df, chi_square_pvalue(stat, df)};
}

/// Chi-square test of independence on a contingency table. Rows and
/// columns with zero margin are dropped before computing df.
inline chi_square_result chi_square_independence(
    const std::vector<std::vector<long long>>& table) {
  if (table.empty() || table[0].empty())
    throw bad_params_error("contingency table must be nonempty");
  const std::size_t cols = table[0].size();
  std::vector<double> row_sum(table.size(), 0.0), col_sum(cols, 0.0);
  double total = 0.0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table[r].size() != cols)
      throw bad_params_error("contingency table must be rectangular");
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = static_cast<double>(table[r][c]);
      if (v < 0.0) throw bad_params_error("counts must be nonnegative");
      row_sum[r] += v;
      col_sum[c] += v;
      total += v;
    }
  }
  if (total <= 0.0) throw bad_params_error("contingency table is all zero");
  std::size_t live_rows = 0, live_cols = 0;
  for (double s : row_sum) live_rows += s > 0.0;
  for (double s : col_sum) live_cols += s > 0.0;
  double stat = 0.0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (row_sum[r] <= 0.0) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_sum[c] <= 0.0) continue;
      const double expected = row_sum[r] * col_sum[c] / total;
      const double diff = static_cast<double>(table[r][c]) - expected;
      stat += diff * diff / expected;
    }
  }
  const std::size_t df = (live_rows - 1) * (live_cols - 1);
  return {stat, df, chi_square_pvalue(stat, df)};
}

}  // namespace seqrank
