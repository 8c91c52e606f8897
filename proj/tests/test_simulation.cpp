#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "likert/classical.hpp"
#include "likert/icr.hpp"
#include "likert/simulation.hpp"

using likert::LikertScale;
using likert::SimConfig;

namespace {

std::map<std::vector<int>, int> column_multiplicities(const likert::ResponseMatrix& m) {
  std::map<std::vector<int>, int> counts;
  for (std::size_t j = 0; j < m.item_count(); ++j) {
    std::vector<int> column(m.respondent_count());
    for (std::size_t i = 0; i < m.respondent_count(); ++i) column[i] = m(i, j);
    ++counts[column];
  }
  return counts;
}

}  // namespace

TEST_CASE("generation is bit-deterministic in the seed", "[simulation]") {
  const auto a = likert::generate_benchmark(100, 20, LikertScale(5), 0.4, 99);
  const auto b = likert::generate_benchmark(100, 20, LikertScale(5), 0.4, 99);
  CHECK(a == b);
  const auto c = likert::generate_benchmark(100, 20, LikertScale(5), 0.4, 100);
  CHECK_FALSE(a == c);
}

TEST_CASE("sub-seed derivation separates streams", "[simulation]") {
  CHECK(likert::derive_seed(7, 0, 0) == likert::derive_seed(7, 0, 0));
  CHECK(likert::derive_seed(7, 0, 0) != likert::derive_seed(7, 0, 1));
  CHECK(likert::derive_seed(7, 1, 0) != likert::derive_seed(7, 0, 0));
  CHECK(likert::derive_seed(8, 0, 0) != likert::derive_seed(7, 0, 0));
}

TEST_CASE("fraction 1 makes every row constant", "[simulation]") {
  const auto m = likert::generate_benchmark(200, 30, LikertScale(5), 1.0, 4);
  for (std::size_t i = 0; i < m.respondent_count(); ++i) {
    const auto row = m.row(i);
    for (int v : row) CHECK(v == row[0]);
  }
  CHECK(likert::zero_variation_report(m).nonzero_count == 0);
}

TEST_CASE("fraction 0.5 duplicates exactly half the columns", "[simulation]") {
  const auto m = likert::generate_benchmark(1000, 50, LikertScale(5), 0.5, 11);
  const auto counts = column_multiplicities(m);
  int max_mult = 0, singles = 0;
  for (const auto& [column, count] : counts) {
    max_mult = std::max(max_mult, count);
    if (count == 1) ++singles;
  }
  CHECK(max_mult == 25);
  CHECK(singles == 25);
}

TEST_CASE("fraction validation", "[simulation]") {
  CHECK_THROWS_AS(likert::generate_benchmark(10, 10, LikertScale(5), 0.0, 1),
                  likert::Error);
  CHECK_THROWS_AS(likert::generate_benchmark(10, 10, LikertScale(5), 1.5, 1),
                  likert::Error);
}

TEST_CASE("run_sweep orders rows, aggregates and stays deterministic", "[simulation]") {
  SimConfig cfg;
  cfg.respondents = 60;
  cfg.items = 10;
  cfg.fractions = {1.0, 0.4, 0.8};
  cfg.replicates = 3;
  cfg.seed = 5;

  const auto rows = likert::run_sweep(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].fraction == 0.4);
  CHECK(rows[1].fraction == 0.8);
  CHECK(rows[2].fraction == 1.0);
  for (const auto& row : rows) {
    for (const auto& cell : row.phi) {
      CHECK(cell.valid_replicates == 3);
      CHECK_FALSE(std::isnan(cell.stddev));
    }
  }

  const auto again = likert::run_sweep(cfg);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CHECK(rows[r].cronbach.mean == again[r].cronbach.mean);
    for (std::size_t v = 0; v < 4; ++v)
      CHECK(rows[r].phi[v].mean == again[r].phi[v].mean);
  }
}

TEST_CASE("every index is exactly 1 at fraction 1", "[simulation]") {
  SimConfig cfg;
  cfg.respondents = 50;
  cfg.items = 10;
  cfg.fractions = {1.0};
  cfg.replicates = 4;
  cfg.seed = 21;
  const auto rows = likert::run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cronbach.mean == 1.0);
  for (const auto& cell : rows[0].phi) CHECK(cell.mean == 1.0);

  // and per replicate, not just in the mean
  for (std::size_t r = 0; r < cfg.replicates; ++r) {
    const auto m = likert::generate_benchmark(cfg.respondents, cfg.items, cfg.scale,
                                              1.0, likert::derive_seed(cfg.seed, 0, r));
    CHECK(likert::cronbach_alpha(m) == 1.0);
    for (const auto variant : likert::kPhiVariants)
      CHECK(likert::icr(m, variant) == 1.0);
  }
}

TEST_CASE("mean cronbach and phi1 are non-decreasing in the fraction", "[simulation]") {
  const auto rows = likert::run_sweep(SimConfig{});  // paper-scale defaults
  REQUIRE(rows.size() == 10);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(rows[r].cronbach.mean >= rows[r - 1].cronbach.mean);
    CHECK(rows[r].phi[0].mean >= rows[r - 1].phi[0].mean);
  }
}

TEST_CASE("per-index degeneracy is carried into the sweep row", "[simulation]") {
  // tiny matrices make the empirical-denominator variants collapse on some
  // replicates (both respondents share a modal answer); those replicates are
  // excluded from the phi3/phi4 means and counted instead
  SimConfig cfg;
  cfg.respondents = 2;
  cfg.items = 20;
  cfg.fractions = {0.9};
  cfg.replicates = 10;
  cfg.seed = 3;
  const auto rows = likert::run_sweep(cfg);
  REQUIRE(rows.size() == 1);
  const auto& phi3 = rows[0].phi[2];
  CHECK(phi3.valid_replicates == 5);
  CHECK(phi3.degenerate_replicates == 5);
  CHECK_FALSE(phi3.degenerate());
  CHECK(std::isfinite(phi3.mean));
  // the theoretical-denominator variants never degenerate
  CHECK(rows[0].phi[0].degenerate_replicates == 0);
  // one replicate happens to draw equal respondent totals, so alpha is
  // degenerate there as well
  CHECK(rows[0].cronbach.valid_replicates == 9);
  CHECK(rows[0].cronbach.degenerate_replicates == 1);
}

TEST_CASE("sweep config validation", "[simulation]") {
  SimConfig cfg;
  cfg.fractions = {};
  CHECK_THROWS_AS(likert::run_sweep(cfg), likert::Error);
  cfg.fractions = {0.5};
  cfg.replicates = 0;
  CHECK_THROWS_AS(likert::run_sweep(cfg), likert::Error);
}
