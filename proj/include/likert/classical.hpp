#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "likert/error.hpp"
#include "likert/response_matrix.hpp"

namespace likert {

/// Per-respondent zero-variation diagnostics. A respondent is zero-variation
/// (single-minded) when every entry of their row is equal; such a row has
/// sample variance exactly 0.
struct ZeroVariationReport {
  std::vector<bool> flags;                  // flags[i] <=> row i is constant
  std::vector<double> respondent_variances; // sample variance, divisor p-1
  std::size_t nonzero_count = 0;            // respondents with variance > 0
  double ratio = 0.0;                       // nonzero_count / n
};

struct ItemTotals {
  std::vector<std::int64_t> totals;  // totals[j] = sum of column j
};

namespace detail {

// Scaled sum of squared deviations: m * sum(x^2) - (sum x)^2, which equals
// m*(m-1) times the sample variance. Integer arithmetic keeps the identical-
// columns case exact (the variance ratio cancels without rounding).
inline __int128 scaled_ss(std::span<const int> values) {
  std::int64_t s = 0, s2 = 0;
  for (int v : values) {
    s += v;
    s2 += static_cast<std::int64_t>(v) * v;
  }
  return static_cast<__int128>(values.size()) * s2 -
         static_cast<__int128>(s) * s;
}

}  // namespace detail

inline ItemTotals item_totals(const ResponseMatrix& m) {
  ItemTotals out;
  out.totals.assign(m.item_count(), 0);
  for (std::size_t i = 0; i < m.respondent_count(); ++i)
    for (std::size_t j = 0; j < m.item_count(); ++j)
      out.totals[j] += m(i, j);
  return out;
}

/// Empirical Cronbach alpha: (p/(p-1)) * (1 - sum of item variances / variance
/// of per-respondent totals). Variance divisors cancel in the ratio, so the
/// whole computation runs on integer sums of squares and stays exact until the
/// final division; a matrix whose columns are all copies of one non-constant
/// column yields exactly 1.0. The value is reported unclamped and can be
/// negative.
inline double cronbach_alpha(const ResponseMatrix& m) {
  const std::size_t n = m.respondent_count();
  const std::size_t p = m.item_count();
  if (p < 2) throw Error(Errc::too_few_items, "alpha needs at least 2 items");

  __int128 ss_items = 0;
  for (std::size_t j = 0; j < p; ++j) {
    std::int64_t s = 0, s2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int v = m(i, j);
      s += v;
      s2 += static_cast<std::int64_t>(v) * v;
    }
    ss_items += static_cast<__int128>(n) * s2 - static_cast<__int128>(s) * s;
  }

  std::int64_t total_sum = 0;
  __int128 total_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t t = 0;
    for (int v : m.row(i)) t += v;
    total_sum += t;
    total_sq += static_cast<__int128>(t) * t;
  }
  const __int128 ss_total = static_cast<__int128>(n) * total_sq -
                            static_cast<__int128>(total_sum) * total_sum;
  if (ss_total == 0)
    throw Error(Errc::degenerate_total_variance,
                "all respondent totals are equal");

  const __int128 num = static_cast<__int128>(p) * (ss_total - ss_items);
  const __int128 den = static_cast<__int128>(p - 1) * ss_total;
  return static_cast<double>(num) / static_cast<double>(den);
}

/// Cronbach alpha of the transposed matrix; measures consistency across
/// respondents instead of items. Delegation makes the identity with
/// cronbach_alpha(m.transposed()) exact.
inline double respondent_reliability(const ResponseMatrix& m) {
  if (m.respondent_count() < 2)
    throw Error(Errc::too_few_respondents,
                "respondent reliability needs at least 2 respondents");
  return cronbach_alpha(m.transposed());
}

inline ZeroVariationReport zero_variation_report(const ResponseMatrix& m) {
  const std::size_t n = m.respondent_count();
  const std::size_t p = m.item_count();
  if (p < 2)
    throw Error(Errc::too_few_items, "row variance needs at least 2 items");

  ZeroVariationReport out;
  out.flags.resize(n);
  out.respondent_variances.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 ss = detail::scaled_ss(m.row(i));
    out.flags[i] = (ss == 0);
    out.respondent_variances[i] =
        static_cast<double>(ss) / (static_cast<double>(p) * (p - 1));
    if (!out.flags[i]) ++out.nonzero_count;
  }
  out.ratio = static_cast<double>(out.nonzero_count) / static_cast<double>(n);
  return out;
}

}  // namespace likert
