#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "likert/icr.hpp"

using likert::Errc;
using likert::Error;
using likert::LikertScale;
using likert::ResponseMatrix;

namespace {

ResponseMatrix make(std::size_t n, std::size_t p, int k, std::vector<int> entries) {
  return ResponseMatrix(n, p, LikertScale(k), std::move(entries));
}

/// n x p matrix where row i is constant at constants[i].
ResponseMatrix constant_rows(const std::vector<int>& constants, std::size_t p, int k) {
  std::vector<int> entries;
  for (int c : constants)
    for (std::size_t j = 0; j < p; ++j) entries.push_back(c);
  return make(constants.size(), p, k, std::move(entries));
}

}  // namespace

TEST_CASE("all-constant rows give phi exactly 1 in every variant", "[icr]") {
  const auto m = constant_rows({2, 4, 1, 5}, 6, 5);
  for (const auto variant : likert::kPhiVariants)
    CHECK(likert::icr(m, variant) == 1.0);

  // all entries equal: the modal entropy is 0 too, and 0/0 is defined as 1
  const auto flat = constant_rows({3, 3, 3}, 4, 5);
  for (const auto variant : likert::kPhiVariants)
    CHECK(likert::icr(flat, variant) == 1.0);
}

TEST_CASE("rows exhausting the scale give phi1 = phi2 = 0", "[icr]") {
  // every respondent distribution is exactly uniform, so H = log2(K)
  const auto m = make(2, 5, 5, {1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
  CHECK(likert::icr(m, likert::kPhi1) == 0.0);
  CHECK(likert::icr(m, likert::kPhi2) == 0.0);
}

TEST_CASE("min/max numerator ordering", "[icr]") {
  // one single-minded respondent (H=0), one uniform respondent (H=log2 K)
  const auto m = make(2, 4, 4, {2, 2, 2, 2, 1, 2, 3, 4});
  CHECK(likert::icr(m, likert::kPhi1) == 1.0);
  CHECK(likert::icr(m, likert::kPhi2) == 0.0);
  const auto entropies = likert::respondent_entropies(m);
  CHECK(entropies[0] == 0.0);
  CHECK_THAT(entropies[1], Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("degenerate modal entropy with positive numerator is an error", "[icr]") {
  // both respondents have mode 1, so H(w) = 0, but row entropies are positive
  const auto m = make(2, 3, 3, {1, 1, 2, 1, 1, 3});
  CHECK_THROWS_MATCHES(likert::icr(m, likert::kPhi3), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::degenerate_modal_entropy;
                       }));
  CHECK(likert::icr(m, likert::kPhi1) > 0.0);
}

TEST_CASE("empirical-denominator variants are reported unclamped", "[icr]") {
  // 9 respondents answer (1,1,2), one answers (2,2,1): H(w) ~ 0.469 bits is
  // below every row entropy (~0.918), pushing phi3 and phi4 negative
  std::vector<int> entries;
  for (int i = 0; i < 9; ++i) { entries.push_back(1); entries.push_back(1); entries.push_back(2); }
  entries.push_back(2); entries.push_back(2); entries.push_back(1);
  const auto m = make(10, 3, 3, std::move(entries));
  CHECK(likert::icr(m, likert::kPhi3) < 0.0);
  CHECK(likert::icr(m, likert::kPhi4) < 0.0);
  CHECK(likert::icr(m, likert::kPhi3) >= likert::icr(m, likert::kPhi4));
}

TEST_CASE("reliability report delegates and carries shapes", "[icr]") {
  const auto m = make(3, 4, 5, {1, 2, 1, 4, 3, 3, 2, 1, 5, 5, 4, 2});
  const auto report = likert::reliability_report(m);
  CHECK(report.respondents == 3);
  CHECK(report.items == 4);
  CHECK(report.scale_levels == 5);
  REQUIRE(report.item_entropies.size() == 4);
  CHECK(report.min_respondent_entropy <= report.max_respondent_entropy);
  REQUIRE(report.phi[0].ok());
  CHECK(report.phi[0].value == likert::icr(m, likert::kPhi1));
  CHECK(report.phi[1].value == likert::icr(m, likert::kPhi2));
  REQUIRE(report.alpha.ok());
  CHECK(report.alpha.value == likert::cronbach_alpha(m));
  CHECK(report.zero_variation.flags.size() == 3);
}

TEST_CASE("report on constant-row matrices traces the component contracts", "[icr]") {
  // distinct constants: columns are identical and non-constant, so alpha = 1
  const auto distinct = constant_rows({1, 3, 2, 5}, 4, 5);
  const auto r1 = likert::reliability_report(distinct);
  REQUIRE(r1.alpha.ok());
  CHECK(r1.alpha.value == 1.0);
  for (const auto& phi : r1.phi) {
    REQUIRE(phi.ok());
    CHECK(phi.value == 1.0);
  }
  CHECK(r1.zero_variation.nonzero_count == 0);
  CHECK(r1.zero_variation.ratio == 0.0);

  // equal constants: respondent totals are all equal, alpha is degenerate,
  // but the report still carries everything else
  const auto flat = constant_rows({3, 3, 3, 3}, 4, 5);
  const auto r2 = likert::reliability_report(flat);
  CHECK_FALSE(r2.alpha.ok());
  CHECK(r2.alpha.error == "DegenerateTotalVariance");
  for (const auto& phi : r2.phi) {
    REQUIRE(phi.ok());
    CHECK(phi.value == 1.0);
  }
  CHECK(r2.modal_entropy == 0.0);
}

TEST_CASE("report carries the degenerate-modal-entropy marker", "[icr]") {
  const auto m = make(2, 3, 3, {1, 1, 2, 1, 1, 3});
  const auto report = likert::reliability_report(m);
  REQUIRE(report.phi[0].ok());
  CHECK_FALSE(report.phi[2].ok());
  CHECK(report.phi[2].error == "DegenerateModalEntropy");
  CHECK_FALSE(report.phi[3].ok());
}

TEST_CASE("report preconditions", "[icr]") {
  CHECK_THROWS_MATCHES(likert::reliability_report(make(3, 1, 5, {1, 2, 3})), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::too_few_items;
                       }));
  CHECK_THROWS_MATCHES(likert::reliability_report(make(1, 3, 5, {1, 2, 3})), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::too_few_respondents;
                       }));
}
