#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "likert/classical.hpp"
#include "likert/distributions.hpp"
#include "likert/error.hpp"
#include "likert/info_measures.hpp"
#include "likert/response_matrix.hpp"

namespace likert {

enum class NumeratorMode { min_over_respondents, max_over_respondents };
enum class DenominatorMode { theoretical_log2_k, empirical_modal_entropy };

/// One cell of the 2x2 grid of information consistency ratio variants:
/// 1 - (extremal respondent entropy) / (maximal-entropy denominator).
struct IcrVariant {
  NumeratorMode numerator;
  DenominatorMode denominator;
};

// The four named variants, in report order phi1..phi4.
inline constexpr IcrVariant kPhi1{NumeratorMode::min_over_respondents,
                                  DenominatorMode::theoretical_log2_k};
inline constexpr IcrVariant kPhi2{NumeratorMode::max_over_respondents,
                                  DenominatorMode::theoretical_log2_k};
inline constexpr IcrVariant kPhi3{NumeratorMode::min_over_respondents,
                                  DenominatorMode::empirical_modal_entropy};
inline constexpr IcrVariant kPhi4{NumeratorMode::max_over_respondents,
                                  DenominatorMode::empirical_modal_entropy};

inline constexpr std::array<IcrVariant, 4> kPhiVariants{kPhi1, kPhi2, kPhi3, kPhi4};

/// Entropies H(z_i) of all per-respondent distributions, in bits.
inline std::vector<double> respondent_entropies(const ResponseMatrix& m) {
  std::vector<double> out(m.respondent_count());
  for (std::size_t i = 0; i < m.respondent_count(); ++i)
    out[i] = entropy(respondent_distribution(m, i));
  return out;
}

/// Information consistency ratio. With the theoretical denominator the result
/// lies in [0, 1]; with the empirical modal-entropy denominator it is reported
/// unclamped (it can leave [0, 1] when H(w) differs from the extremal
/// respondent entropy). H(w) = 0 with a positive numerator is undefined and
/// raises DegenerateModalEntropy; 0/0 is defined as phi = 1, which keeps the
/// identical-items limit exact.
inline double icr(const ResponseMatrix& m, IcrVariant variant) {
  const auto entropies = respondent_entropies(m);
  const double numerator =
      variant.numerator == NumeratorMode::min_over_respondents
          ? *std::min_element(entropies.begin(), entropies.end())
          : *std::max_element(entropies.begin(), entropies.end());

  if (variant.denominator == DenominatorMode::theoretical_log2_k)
    return 1.0 - numerator / std::log2(static_cast<double>(m.scale().levels));

  const double modal_h = entropy(modal_distribution(m));
  if (modal_h == 0.0) {
    if (numerator == 0.0) return 1.0;
    throw Error(Errc::degenerate_modal_entropy,
                "modal-answer entropy is 0 with positive respondent entropy");
  }
  return 1.0 - numerator / modal_h;
}

/// A report field: either a finite value or the name of the error that made it
/// undefined for this matrix.
struct ReportValue {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::string error;  // empty <=> value is valid

  bool ok() const noexcept { return error.empty(); }

  static ReportValue of(double v) { return {v, {}}; }
  static ReportValue failed(Errc code) { return {std::numeric_limits<double>::quiet_NaN(),
                                                 std::string(errc_name(code))}; }
};

/// Everything the library computes for one response matrix. Degenerate
/// component statistics are carried as per-field error markers instead of
/// failing the whole report.
struct ReliabilityReport {
  std::size_t respondents = 0;
  std::size_t items = 0;
  int scale_levels = 0;

  ReportValue alpha;
  ReportValue respondent_alpha;
  std::array<ReportValue, 4> phi;  // phi1..phi4

  double min_respondent_entropy = 0.0;  // bits
  double max_respondent_entropy = 0.0;  // bits
  double modal_entropy = 0.0;           // H(w), bits
  std::vector<double> item_entropies;   // one per item, bits

  ZeroVariationReport zero_variation;
};

namespace detail {

template <typename Fn>
ReportValue guarded(Fn&& fn) {
  try {
    return ReportValue::of(fn());
  } catch (const Error& e) {
    if (!is_degenerate(e.code())) throw;
    return ReportValue::failed(e.code());
  }
}

}  // namespace detail

inline ReliabilityReport reliability_report(const ResponseMatrix& m) {
  if (m.item_count() < 2)
    throw Error(Errc::too_few_items, "report needs at least 2 items");
  if (m.respondent_count() < 2)
    throw Error(Errc::too_few_respondents, "report needs at least 2 respondents");

  ReliabilityReport report;
  report.respondents = m.respondent_count();
  report.items = m.item_count();
  report.scale_levels = m.scale().levels;

  report.alpha = detail::guarded([&] { return cronbach_alpha(m); });
  report.respondent_alpha = detail::guarded([&] { return respondent_reliability(m); });
  for (std::size_t v = 0; v < kPhiVariants.size(); ++v)
    report.phi[v] = detail::guarded([&] { return icr(m, kPhiVariants[v]); });

  const auto entropies = respondent_entropies(m);
  report.min_respondent_entropy = *std::min_element(entropies.begin(), entropies.end());
  report.max_respondent_entropy = *std::max_element(entropies.begin(), entropies.end());
  report.modal_entropy = entropy(modal_distribution(m));

  report.item_entropies.resize(m.item_count());
  for (std::size_t j = 0; j < m.item_count(); ++j)
    report.item_entropies[j] = entropy(item_distribution(m, j));

  report.zero_variation = zero_variation_report(m);
  return report;
}

}  // namespace likert
