#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "likert/classical.hpp"
#include "likert/error.hpp"
#include "likert/icr.hpp"
#include "likert/response_matrix.hpp"

namespace likert {

// Reproducibility contract: matrices are generated from std::mt19937_64
// (fully specified by the standard) with bounded draws taken by multiply-shift
// reduction of the raw 64-bit output, and sub-seeds derived with the
// splitmix64 finalizer. Identical configuration => bit-identical output on
// any conforming platform.

namespace rngdetail {

inline std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Multiply-shift reduction of a raw draw onto 0..bound-1.
inline std::uint64_t bounded(std::uint64_t raw, std::uint64_t bound) noexcept {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(raw) * bound) >> 64);
}

inline int uniform_level(std::mt19937_64& gen, int levels) {
  return 1 + static_cast<int>(bounded(gen(), static_cast<std::uint64_t>(levels)));
}

}  // namespace rngdetail

/// Sub-seed for (fraction index, replicate index) streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) noexcept {
  std::uint64_t h = rngdetail::splitmix64_mix(seed);
  h = rngdetail::splitmix64_mix(h ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
  h = rngdetail::splitmix64_mix(h ^ (0xC2B2AE3D27D4EB4Full * (index + 1)));
  return h;
}

struct SimConfig {
  std::size_t respondents = 1000;
  std::size_t items = 50;
  LikertScale scale{5};
  std::vector<double> fractions = {0.1, 0.2, 0.3, 0.4, 0.5,
                                   0.6, 0.7, 0.8, 0.9, 1.0};
  std::uint64_t seed = 66;
  std::size_t replicates = 10;
};

/// Benchmark matrix: n x p of i.i.d. uniform levels, with round(c*p) columns
/// (chosen by a seeded Fisher-Yates shuffle, without replacement) all replaced
/// by one shared column whose entries are drawn once, uniformly per
/// respondent. Draw order is fixed: matrix entries row-major, then the shared
/// column, then the column shuffle.
inline ResponseMatrix generate_benchmark(std::size_t respondents, std::size_t items,
                                         LikertScale scale, double fraction,
                                         std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error(Errc::invalid_argument, "fraction must be in (0, 1]");
  if (respondents == 0 || items == 0)
    throw Error(Errc::invalid_argument, "matrix dimensions must be positive");

  std::mt19937_64 gen(seed);
  std::vector<int> entries(respondents * items);
  for (auto& e : entries) e = rngdetail::uniform_level(gen, scale.levels);

  std::vector<int> shared(respondents);
  for (auto& s : shared) s = rngdetail::uniform_level(gen, scale.levels);

  const auto duplicated =
      static_cast<std::size_t>(std::llround(fraction * static_cast<double>(items)));
  std::vector<std::size_t> columns(items);
  for (std::size_t j = 0; j < items; ++j) columns[j] = j;
  for (std::size_t j = items - 1; j > 0; --j) {
    const auto k = rngdetail::bounded(gen(), j + 1);
    std::swap(columns[j], columns[k]);
  }

  for (std::size_t c = 0; c < std::min(duplicated, items); ++c)
    for (std::size_t i = 0; i < respondents; ++i)
      entries[i * items + columns[c]] = shared[i];

  return ResponseMatrix(respondents, items, scale, std::move(entries));
}

inline ResponseMatrix generate_benchmark(const SimConfig& cfg, double fraction) {
  return generate_benchmark(cfg.respondents, cfg.items, cfg.scale, fraction, cfg.seed);
}

/// Aggregate of one index over the replicates of one fraction. Replicates on
/// which the index was degenerate are excluded from the mean; a cell with no
/// valid replicate is itself degenerate.
struct SweepCell {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double stddev = std::numeric_limits<double>::quiet_NaN();  // sample, replicates > 1
  std::size_t valid_replicates = 0;
  std::size_t degenerate_replicates = 0;

  bool degenerate() const noexcept { return valid_replicates == 0; }
};

struct SweepRow {
  double fraction = 0.0;
  std::array<SweepCell, 4> phi;  // phi1..phi4
  SweepCell cronbach;
};

namespace detail {

inline SweepCell aggregate(const std::vector<double>& values, std::size_t total) {
  SweepCell cell;
  cell.valid_replicates = values.size();
  cell.degenerate_replicates = total - values.size();
  if (values.empty()) return cell;
  double sum = 0.0;
  for (double v : values) sum += v;
  cell.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - cell.mean) * (v - cell.mean);
    cell.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return cell;
}

}  // namespace detail

/// Runs the fraction sweep: for each fraction (ascending), `replicates`
/// matrices from sub-seeds derive_seed(seed, fraction index, replicate index),
/// with per-fraction means and sample stddevs of phi1..phi4 and Cronbach alpha.
inline std::vector<SweepRow> run_sweep(const SimConfig& cfg) {
  if (cfg.replicates == 0)
    throw Error(Errc::invalid_argument, "replicates must be positive");
  std::vector<double> fractions = cfg.fractions;
  std::sort(fractions.begin(), fractions.end());
  if (fractions.empty())
    throw Error(Errc::invalid_argument, "no fractions given");
  for (double c : fractions)
    if (!(c > 0.0 && c <= 1.0))
      throw Error(Errc::invalid_argument, "fraction must be in (0, 1]");

  std::vector<SweepRow> rows;
  rows.reserve(fractions.size());
  for (std::size_t fi = 0; fi < fractions.size(); ++fi) {
    std::array<std::vector<double>, 4> phi_values;
    std::vector<double> alpha_values;
    for (std::size_t r = 0; r < cfg.replicates; ++r) {
      const auto m = generate_benchmark(cfg.respondents, cfg.items, cfg.scale,
                                        fractions[fi], derive_seed(cfg.seed, fi, r));
      for (std::size_t v = 0; v < kPhiVariants.size(); ++v) {
        try {
          phi_values[v].push_back(icr(m, kPhiVariants[v]));
        } catch (const Error& e) {
          if (!is_degenerate(e.code())) throw;
        }
      }
      try {
        alpha_values.push_back(cronbach_alpha(m));
      } catch (const Error& e) {
        if (!is_degenerate(e.code())) throw;
      }
    }

    SweepRow row;
    row.fraction = fractions[fi];
    for (std::size_t v = 0; v < 4; ++v)
      row.phi[v] = detail::aggregate(phi_values[v], cfg.replicates);
    row.cronbach = detail::aggregate(alpha_values, cfg.replicates);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace likert
