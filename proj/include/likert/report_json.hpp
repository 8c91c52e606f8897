#pragma once

// JSON serialization of ReliabilityReport and sweep rows (nlohmann/json).
// Kept out of the core headers so the library proper has no JSON dependency.
// Doubles are emitted at full round-trip precision. Degenerate statistics are
// null in place, with the error name recorded in the top-level "errors" map
// (keys: alpha, respondent_alpha, phi1..phi4).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "likert/icr.hpp"
#include "likert/simulation.hpp"

namespace likert {

namespace jsondetail {

inline nlohmann::json value_or_null(const ReportValue& v) {
  return v.ok() ? nlohmann::json(v.value) : nlohmann::json(nullptr);
}

inline void note_error(nlohmann::json& errors, const char* field,
                       const ReportValue& v) {
  if (!v.ok()) errors[field] = v.error;
}

inline ReportValue read_value(const nlohmann::json& j, const nlohmann::json& errors,
                              const char* field) {
  ReportValue v;
  if (j.is_null()) {
    v.error = errors.contains(field) ? errors.at(field).get<std::string>()
                                     : std::string("Unknown");
  } else {
    v.value = j.get<double>();
  }
  return v;
}

}  // namespace jsondetail

inline nlohmann::json to_json(const ReliabilityReport& r) {
  nlohmann::json j;
  j["respondents"] = r.respondents;
  j["items"] = r.items;
  j["scale"] = r.scale_levels;
  j["alpha"] = jsondetail::value_or_null(r.alpha);
  j["respondent_alpha"] = jsondetail::value_or_null(r.respondent_alpha);
  j["phi"] = nlohmann::json::array();
  for (const auto& phi : r.phi) j["phi"].push_back(jsondetail::value_or_null(phi));
  j["min_respondent_entropy"] = r.min_respondent_entropy;
  j["max_respondent_entropy"] = r.max_respondent_entropy;
  j["modal_entropy"] = r.modal_entropy;
  j["item_entropies"] = r.item_entropies;
  j["zero_variation"] = {
      {"flags", r.zero_variation.flags},
      {"respondent_variances", r.zero_variation.respondent_variances},
      {"nonzero_count", r.zero_variation.nonzero_count},
      {"ratio", r.zero_variation.ratio},
  };

  nlohmann::json errors = nlohmann::json::object();
  jsondetail::note_error(errors, "alpha", r.alpha);
  jsondetail::note_error(errors, "respondent_alpha", r.respondent_alpha);
  static constexpr const char* kPhiNames[] = {"phi1", "phi2", "phi3", "phi4"};
  for (std::size_t v = 0; v < r.phi.size(); ++v)
    jsondetail::note_error(errors, kPhiNames[v], r.phi[v]);
  j["errors"] = std::move(errors);
  return j;
}

inline ReliabilityReport report_from_json(const nlohmann::json& j) {
  ReliabilityReport r;
  const auto& errors = j.at("errors");
  r.respondents = j.at("respondents").get<std::size_t>();
  r.items = j.at("items").get<std::size_t>();
  r.scale_levels = j.at("scale").get<int>();
  r.alpha = jsondetail::read_value(j.at("alpha"), errors, "alpha");
  r.respondent_alpha =
      jsondetail::read_value(j.at("respondent_alpha"), errors, "respondent_alpha");
  static constexpr const char* kPhiNames[] = {"phi1", "phi2", "phi3", "phi4"};
  for (std::size_t v = 0; v < r.phi.size(); ++v)
    r.phi[v] = jsondetail::read_value(j.at("phi").at(v), errors, kPhiNames[v]);
  r.min_respondent_entropy = j.at("min_respondent_entropy").get<double>();
  r.max_respondent_entropy = j.at("max_respondent_entropy").get<double>();
  r.modal_entropy = j.at("modal_entropy").get<double>();
  r.item_entropies = j.at("item_entropies").get<std::vector<double>>();
  const auto& zv = j.at("zero_variation");
  r.zero_variation.flags = zv.at("flags").get<std::vector<bool>>();
  r.zero_variation.respondent_variances =
      zv.at("respondent_variances").get<std::vector<double>>();
  r.zero_variation.nonzero_count = zv.at("nonzero_count").get<std::size_t>();
  r.zero_variation.ratio = zv.at("ratio").get<double>();
  return r;
}

inline nlohmann::json to_json(const SweepCell& cell) {
  nlohmann::json j;
  if (cell.degenerate()) {
    j["mean"] = nullptr;
  } else {
    j["mean"] = cell.mean;
    if (cell.valid_replicates > 1) j["stddev"] = cell.stddev;
  }
  j["valid_replicates"] = cell.valid_replicates;
  j["degenerate_replicates"] = cell.degenerate_replicates;
  return j;
}

inline nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["fraction"] = row.fraction;
    j["phi1"] = to_json(row.phi[0]);
    j["phi2"] = to_json(row.phi[1]);
    j["phi3"] = to_json(row.phi[2]);
    j["phi4"] = to_json(row.phi[3]);
    j["cronbach"] = to_json(row.cronbach);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace likert
