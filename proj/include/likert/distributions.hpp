#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "likert/error.hpp"
#include "likert/response_matrix.hpp"

namespace likert {

/// Empirical distribution over the K response levels. Entry k-1 is the
/// probability of level k. Always a valid simplex vector: entries in [0,1]
/// summing to 1 within 1e-9.
class ProbVector {
 public:
  static constexpr double kSimplexTolerance = 1e-9;

  static ProbVector from_probabilities(std::vector<double> probs) {
    double sum = 0.0;
    for (double v : probs) {
      if (!(v >= 0.0 && v <= 1.0))
        throw Error(Errc::invalid_argument, "probability outside [0,1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance)
      throw Error(Errc::invalid_argument, "probabilities sum to " + std::to_string(sum));
    return ProbVector(std::move(probs));
  }

  /// Plug-in estimate count_k / total. Exact rational inputs, one rounding
  /// per entry.
  static ProbVector from_counts(std::span<const std::size_t> counts, std::size_t total) {
    if (total == 0) throw Error(Errc::invalid_argument, "zero total count");
    std::vector<double> probs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
      probs[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
    return ProbVector(std::move(probs));
  }

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> probabilities() const noexcept { return probs_; }

  friend bool operator==(const ProbVector& a, const ProbVector& b) noexcept {
    return a.probs_ == b.probs_;
  }

 private:
  explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

/// Empirical joint distribution of an item pair over K x K level combinations.
/// Row sums recover the first item's marginal, column sums the second's.
class JointProbMatrix {
 public:
  static JointProbMatrix from_counts(std::vector<std::size_t> counts,
                                     std::size_t levels, std::size_t total) {
    if (total == 0) throw Error(Errc::invalid_argument, "zero total count");
    std::vector<double> probs(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c)
      probs[c] = static_cast<double>(counts[c]) / static_cast<double>(total);
    return JointProbMatrix(std::move(probs), levels);
  }

  std::size_t levels() const noexcept { return levels_; }
  double operator()(std::size_t k, std::size_t l) const { return probs_[k * levels_ + l]; }

  ProbVector row_marginal() const {
    std::vector<double> out(levels_, 0.0);
    for (std::size_t k = 0; k < levels_; ++k)
      for (std::size_t l = 0; l < levels_; ++l) out[k] += (*this)(k, l);
    return ProbVector::from_probabilities(std::move(out));
  }

  ProbVector column_marginal() const {
    std::vector<double> out(levels_, 0.0);
    for (std::size_t k = 0; k < levels_; ++k)
      for (std::size_t l = 0; l < levels_; ++l) out[l] += (*this)(k, l);
    return ProbVector::from_probabilities(std::move(out));
  }

 private:
  JointProbMatrix(std::vector<double> probs, std::size_t levels)
      : probs_(std::move(probs)), levels_(levels) {}
  std::vector<double> probs_;
  std::size_t levels_;
};

namespace detail {

inline void check_item_index(const ResponseMatrix& m, std::size_t item) {
  if (item >= m.item_count())
    throw Error(Errc::index_out_of_range,
                "item index " + std::to_string(item) + " with " +
                    std::to_string(m.item_count()) + " items");
}

inline void check_respondent_index(const ResponseMatrix& m, std::size_t respondent) {
  if (respondent >= m.respondent_count())
    throw Error(Errc::index_out_of_range,
                "respondent index " + std::to_string(respondent) + " with " +
                    std::to_string(m.respondent_count()) + " respondents");
}

inline std::vector<std::size_t> row_level_counts(const ResponseMatrix& m,
                                                 std::size_t respondent) {
  std::vector<std::size_t> counts(m.scale().levels, 0);
  for (int v : m.row(respondent)) ++counts[static_cast<std::size_t>(v - 1)];
  return counts;
}

}  // namespace detail

/// Relative frequency of each level within column `item` (0-based index).
inline ProbVector item_distribution(const ResponseMatrix& m, std::size_t item) {
  detail::check_item_index(m, item);
  std::vector<std::size_t> counts(m.scale().levels, 0);
  for (std::size_t i = 0; i < m.respondent_count(); ++i)
    ++counts[static_cast<std::size_t>(m(i, item) - 1)];
  return ProbVector::from_counts(counts, m.respondent_count());
}

/// Relative frequency of each level within row `respondent` (0-based index).
inline ProbVector respondent_distribution(const ResponseMatrix& m, std::size_t respondent) {
  detail::check_respondent_index(m, respondent);
  return ProbVector::from_counts(detail::row_level_counts(m, respondent), m.item_count());
}

inline std::vector<ProbVector> all_item_distributions(const ResponseMatrix& m) {
  std::vector<ProbVector> out;
  out.reserve(m.item_count());
  for (std::size_t j = 0; j < m.item_count(); ++j)
    out.push_back(item_distribution(m, j));
  return out;
}

inline std::vector<ProbVector> all_respondent_distributions(const ResponseMatrix& m) {
  std::vector<ProbVector> out;
  out.reserve(m.respondent_count());
  for (std::size_t i = 0; i < m.respondent_count(); ++i)
    out.push_back(respondent_distribution(m, i));
  return out;
}

/// Modal answer per respondent: the most frequent level in their row, ties
/// broken toward the smallest level. Returned values are levels in 1..K.
inline std::vector<int> modal_responses(const ResponseMatrix& m) {
  std::vector<int> out(m.respondent_count());
  for (std::size_t i = 0; i < m.respondent_count(); ++i) {
    const auto counts = detail::row_level_counts(m, i);
    std::size_t best = 0;
    for (std::size_t k = 1; k < counts.size(); ++k)
      if (counts[k] > counts[best]) best = k;
    out[i] = static_cast<int>(best + 1);
  }
  return out;
}

/// Distribution of modal answers across respondents.
inline ProbVector modal_distribution(const ResponseMatrix& m) {
  std::vector<std::size_t> counts(m.scale().levels, 0);
  for (int y : modal_responses(m)) ++counts[static_cast<std::size_t>(y - 1)];
  return ProbVector::from_counts(counts, m.respondent_count());
}

/// Empirical co-occurrence frequency of level pairs for two items, the plug-in
/// estimator consistent with the marginal item distributions.
inline JointProbMatrix joint_item_distribution(const ResponseMatrix& m,
                                               std::size_t first, std::size_t second) {
  detail::check_item_index(m, first);
  detail::check_item_index(m, second);
  const std::size_t levels = static_cast<std::size_t>(m.scale().levels);
  std::vector<std::size_t> counts(levels * levels, 0);
  for (std::size_t r = 0; r < m.respondent_count(); ++r) {
    const auto k = static_cast<std::size_t>(m(r, first) - 1);
    const auto l = static_cast<std::size_t>(m(r, second) - 1);
    ++counts[k * levels + l];
  }
  return JointProbMatrix::from_counts(std::move(counts), levels, m.respondent_count());
}

}  // namespace likert
