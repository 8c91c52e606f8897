#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "likert/distributions.hpp"
#include "likert/error.hpp"
#include "likert/response_matrix.hpp"

namespace likert {

// Log-base conventions, fixed across the library:
//   - entropy, KL, symmetrized KL, mutual information and variation of
//     information use log2 (results in bits);
//   - the Bhattacharyya distance uses the natural log, its standard form.

/// Shannon entropy in bits, with the 0*log2(0) = 0 convention.
/// Result lies in [0, log2(K)].
inline double entropy(const ProbVector& v) {
  double h = 0.0;
  for (double p : v.probabilities())
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

namespace detail {

inline ProbVector smooth(const ProbVector& v, double epsilon) {
  std::vector<double> out(v.size());
  const double norm = 1.0 + epsilon * static_cast<double>(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = (v[k] + epsilon) / norm;
  return ProbVector::from_probabilities(std::move(out));
}

inline void check_same_size(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size())
    throw Error(Errc::invalid_argument, "distributions have different sizes");
}

}  // namespace detail

/// Kullback-Leibler divergence KL(p||q) in bits. Requires q_k = 0 => p_k = 0;
/// a violation is reported as SupportMismatch naming the offending level.
/// A positive `smoothing` epsilon is added to every cell of both arguments
/// (then renormalized) before the computation, which removes the support
/// requirement.
inline double kl_divergence(const ProbVector& p, const ProbVector& q,
                            double smoothing = 0.0) {
  detail::check_same_size(p, q);
  if (smoothing < 0.0)
    throw Error(Errc::invalid_argument, "smoothing must be non-negative");
  if (smoothing > 0.0)
    return kl_divergence(detail::smooth(p, smoothing), detail::smooth(q, smoothing));

  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0.0) continue;
    if (q[k] == 0.0)
      throw Error(Errc::support_mismatch,
                  "level " + std::to_string(k + 1) +
                      " has positive mass in p but zero in q");
    sum += p[k] * std::log2(p[k] / q[k]);
  }
  return sum;
}

/// Symmetrized KL divergence: (KL(p||q) + KL(q||p)) / 2.
inline double symmetric_kl(const ProbVector& p, const ProbVector& q,
                           double smoothing = 0.0) {
  return 0.5 * (kl_divergence(p, q, smoothing) + kl_divergence(q, p, smoothing));
}

/// Mutual information of a joint distribution, in bits. Zero joint cells
/// contribute nothing. I <= min of the marginal entropies.
inline double mutual_information(const JointProbMatrix& joint) {
  const auto pm = joint.row_marginal();
  const auto qm = joint.column_marginal();
  double sum = 0.0;
  for (std::size_t k = 0; k < joint.levels(); ++k) {
    for (std::size_t l = 0; l < joint.levels(); ++l) {
      const double c = joint(k, l);
      if (c > 0.0) sum += c * std::log2(c / (pm[k] * qm[l]));
    }
  }
  return sum;
}

/// Variation of information between two items: H(v_i) + H(v_j) - 2*I, with I
/// taken over the empirical joint of the pair. Analytically >= 0; tiny
/// negative rounding residue is clamped to 0.
inline double variation_of_information(const ResponseMatrix& m,
                                       std::size_t first, std::size_t second) {
  const auto joint = joint_item_distribution(m, first, second);
  const double vi = entropy(item_distribution(m, first)) +
                    entropy(item_distribution(m, second)) -
                    2.0 * mutual_information(joint);
  return vi < 0.0 ? 0.0 : vi;
}

/// Bhattacharyya (fidelity) coefficient: sum of sqrt(p_k * q_k), in [0, 1].
inline double bhattacharyya_coefficient(const ProbVector& p, const ProbVector& q) {
  detail::check_same_size(p, q);
  double f = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) f += std::sqrt(p[k] * q[k]);
  return f;
}

/// Bhattacharyya distance -ln(F). Disjoint supports (F = 0) are an error, not
/// an infinity.
inline double bhattacharyya_distance(const ProbVector& p, const ProbVector& q) {
  const double f = bhattacharyya_coefficient(p, q);
  if (f == 0.0)
    throw Error(Errc::disjoint_support, "distributions share no support");
  return -std::log(f);
}

/// Total variation distance: half the l1 distance, in [0, 1].
inline double total_variation(const ProbVector& p, const ProbVector& q) {
  detail::check_same_size(p, q);
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) sum += std::abs(p[k] - q[k]);
  return 0.5 * sum;
}

/// Hellinger distance: (1/sqrt(2)) * l2 distance of the elementwise square
/// roots, in [0, 1]. Satisfies hellinger^2 = 1 - F.
inline double hellinger(const ProbVector& p, const ProbVector& q) {
  detail::check_same_size(p, q);
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = std::sqrt(p[k]) - std::sqrt(q[k]);
    sum += d * d;
  }
  return std::sqrt(0.5 * sum);
}

enum class PairwiseMeasure { symmetric_kl, variation_of_information,
                             bhattacharyya, total_variation, hellinger };

constexpr std::string_view pairwise_measure_name(PairwiseMeasure m) noexcept {
  switch (m) {
    case PairwiseMeasure::symmetric_kl:             return "kl2";
    case PairwiseMeasure::variation_of_information: return "vi";
    case PairwiseMeasure::bhattacharyya:            return "bc";
    case PairwiseMeasure::total_variation:          return "tv";
    case PairwiseMeasure::hellinger:                return "hellinger";
  }
  return "?";
}

/// Symmetric p x p matrix of one pairwise item measure, zero diagonal.
/// Pairs on which the measure is undefined are stored as NaN and listed in
/// `degenerate` (upper-triangle coordinates).
struct DistanceMatrix {
  struct DegenerateCell {
    std::size_t row, col;
    Errc code;
  };

  std::size_t items = 0;
  std::vector<double> values;  // row-major items x items
  std::vector<DegenerateCell> degenerate;

  double at(std::size_t i, std::size_t j) const { return values[i * items + j]; }
};

inline DistanceMatrix distance_matrix(const ResponseMatrix& m, PairwiseMeasure measure,
                                      double smoothing = 0.0) {
  const std::size_t p = m.item_count();
  DistanceMatrix out;
  out.items = p;
  out.values.assign(p * p, 0.0);

  const auto marginals = all_item_distributions(m);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      double value = 0.0;
      try {
        switch (measure) {
          case PairwiseMeasure::symmetric_kl:
            value = symmetric_kl(marginals[i], marginals[j], smoothing);
            break;
          case PairwiseMeasure::variation_of_information:
            value = variation_of_information(m, i, j);
            break;
          case PairwiseMeasure::bhattacharyya:
            value = bhattacharyya_distance(marginals[i], marginals[j]);
            break;
          case PairwiseMeasure::total_variation:
            value = total_variation(marginals[i], marginals[j]);
            break;
          case PairwiseMeasure::hellinger:
            value = hellinger(marginals[i], marginals[j]);
            break;
        }
      } catch (const Error& e) {
        if (!is_degenerate(e.code())) throw;
        value = std::numeric_limits<double>::quiet_NaN();
        out.degenerate.push_back({i, j, e.code()});
      }
      out.values[i * p + j] = value;
      out.values[j * p + i] = value;
    }
  }
  return out;
}

}  // namespace likert
