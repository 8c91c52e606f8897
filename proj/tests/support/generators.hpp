#pragma once

// Seeded input generators for property tests. Independent of the library's
// simulation RNG; plain mt19937_64 is fine for fabricating test inputs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "likert/distributions.hpp"
#include "likert/response_matrix.hpp"

namespace testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive bounds
    return lo + static_cast<std::size_t>(gen_() % (hi - lo + 1));
  }

  int level(int k) { return 1 + static_cast<int>(gen_() % static_cast<unsigned>(k)); }

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }

  likert::ResponseMatrix matrix(std::size_t min_dim = 1, std::size_t max_dim = 8,
                                int min_k = 2, int max_k = 6) {
    const auto n = index(min_dim, max_dim);
    const auto p = index(min_dim, max_dim);
    const int k = static_cast<int>(index(min_k, max_k));
    std::vector<int> entries(n * p);
    for (auto& e : entries) e = level(k);
    return likert::ResponseMatrix(n, p, likert::LikertScale(k), std::move(entries));
  }

  /// Strictly positive point on the K-simplex (normalized exponentials).
  likert::ProbVector simplex(std::size_t k) {
    std::vector<double> raw(k);
    double sum = 0.0;
    for (auto& x : raw) {
      x = -std::log(1.0 - unit()) + 1e-6;
      sum += x;
    }
    for (auto& x : raw) x /= sum;
    return likert::ProbVector::from_probabilities(std::move(raw));
  }

  /// Simplex point with a random subset of exact zeros (at least one positive).
  likert::ProbVector sparse_simplex(std::size_t k) {
    std::vector<double> raw(k);
    double sum = 0.0;
    for (auto& x : raw) x = unit() < 0.4 ? 0.0 : -std::log(1.0 - unit());
    for (double x : raw) sum += x;
    if (sum == 0.0) raw[index(0, k - 1)] = sum = 1.0;
    for (auto& x : raw) x /= sum;
    return likert::ProbVector::from_probabilities(std::move(raw));
  }

  /// Random joint over k x k levels built from counts (so marginals are
  /// consistent by construction).
  likert::JointProbMatrix joint(std::size_t k, std::size_t draws = 64) {
    std::vector<std::size_t> counts(k * k, 0);
    for (std::size_t d = 0; d < draws; ++d) ++counts[index(0, k * k - 1)];
    return likert::JointProbMatrix::from_counts(std::move(counts), k, draws);
  }

  std::mt19937_64& raw() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testgen
