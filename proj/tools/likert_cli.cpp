// likert — reliability indices, distribution distances and benchmark sweeps
// for Likert-scale response matrices. Subcommands: analyze, distances,
// simulate. Exit codes: 0 success, 1 usage error, 2 data/validation error,
// 3 degenerate computation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "likert/likert.hpp"
#include "likert/report_json.hpp"

namespace {

using likert::Errc;
using likert::Error;

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string format_cell(const likert::ReportValue& v, int precision) {
  return v.ok() ? format_double(v.value, precision) : "NA";
}

likert::ResponseMatrix load_matrix(const std::string& path, int scale_levels,
                                   char delimiter) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::invalid_argument, "cannot open '" + path + "' for reading");
  try {
    return likert::parse_csv(in, likert::LikertScale(scale_levels), delimiter);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::invalid_argument, "cannot open '" + path + "' for writing");
  out << text;
}

std::string report_to_flat_csv(const likert::ReliabilityReport& r, int precision) {
  std::ostringstream header, row;
  header << "respondents,items,scale,alpha,respondent_alpha,phi1,phi2,phi3,phi4,"
            "min_respondent_entropy,max_respondent_entropy,modal_entropy,"
            "zero_variation_nonzero,zero_variation_ratio";
  row << r.respondents << ',' << r.items << ',' << r.scale_levels << ','
      << format_cell(r.alpha, precision) << ','
      << format_cell(r.respondent_alpha, precision);
  for (const auto& phi : r.phi) row << ',' << format_cell(phi, precision);
  row << ',' << format_double(r.min_respondent_entropy, precision)
      << ',' << format_double(r.max_respondent_entropy, precision)
      << ',' << format_double(r.modal_entropy, precision)
      << ',' << r.zero_variation.nonzero_count
      << ',' << format_double(r.zero_variation.ratio, precision);
  for (std::size_t j = 0; j < r.item_entropies.size(); ++j) {
    header << ",item_entropy_" << (j + 1);
    row << ',' << format_double(r.item_entropies[j], precision);
  }
  return header.str() + "\n" + row.str() + "\n";
}

int run_analyze(const std::string& path, int scale_levels, const std::string& format,
                const std::string& output, char delimiter, int precision) {
  const auto matrix = load_matrix(path, scale_levels, delimiter);
  const auto report = likert::reliability_report(matrix);
  if (format == "json") {
    write_output(likert::to_json(report).dump(2) + "\n", output);
  } else {
    write_output(report_to_flat_csv(report, precision), output);
  }
  return 0;
}

int run_distances(const std::string& path, int scale_levels, likert::PairwiseMeasure measure,
                  double smoothing, const std::string& output, char delimiter,
                  int precision) {
  const auto matrix = load_matrix(path, scale_levels, delimiter);
  const auto dist = likert::distance_matrix(matrix, measure, smoothing);

  const std::size_t pairs = dist.items * (dist.items - 1) / 2;
  if (pairs > 0 && dist.degenerate.size() == pairs)
    throw Error(dist.degenerate.front().code,
                "all " + std::to_string(pairs) + " item pairs are degenerate for measure '" +
                    std::string(likert::pairwise_measure_name(measure)) + "'");

  std::ostringstream out;
  out << "item";
  for (std::size_t j = 0; j < dist.items; ++j) out << ",item" << (j + 1);
  out << '\n';
  for (std::size_t i = 0; i < dist.items; ++i) {
    out << "item" << (i + 1);
    for (std::size_t j = 0; j < dist.items; ++j) {
      const double v = dist.at(i, j);
      out << ',' << (std::isnan(v) ? "NA" : format_double(v, precision));
    }
    out << '\n';
  }
  write_output(out.str(), output);

  if (!dist.degenerate.empty()) {
    std::map<std::string, std::size_t> by_code;
    for (const auto& cell : dist.degenerate)
      ++by_code[std::string(likert::errc_name(cell.code))];
    std::cerr << "warning: " << dist.degenerate.size()
              << " degenerate cell(s) rendered as NA:";
    for (const auto& [name, count] : by_code) std::cerr << ' ' << name << "=" << count;
    std::cerr << '\n';
  }
  return 0;
}

std::string sweep_to_csv(const std::vector<likert::SweepRow>& rows,
                         std::size_t replicates, int precision) {
  std::ostringstream out;
  out << "fraction,phi1,phi2,phi3,phi4,cronbach";
  if (replicates > 1)
    out << ",phi1_sd,phi2_sd,phi3_sd,phi4_sd,cronbach_sd";
  out << '\n';
  auto cell_mean = [&](const likert::SweepCell& c) {
    return c.degenerate() ? std::string("NA") : format_double(c.mean, precision);
  };
  auto cell_sd = [&](const likert::SweepCell& c) {
    return c.valid_replicates > 1 ? format_double(c.stddev, precision)
                                  : std::string("NA");
  };
  for (const auto& row : rows) {
    out << format_double(row.fraction, precision);
    for (const auto& phi : row.phi) out << ',' << cell_mean(phi);
    out << ',' << cell_mean(row.cronbach);
    if (replicates > 1) {
      for (const auto& phi : row.phi) out << ',' << cell_sd(phi);
      out << ',' << cell_sd(row.cronbach);
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_to_plot_csv(const std::vector<likert::SweepRow>& rows, int precision) {
  static constexpr const char* kNames[] = {"phi1", "phi2", "phi3", "phi4"};
  std::ostringstream out;
  out << "fraction,index_name,value\n";
  for (const auto& row : rows) {
    for (std::size_t v = 0; v < 4; ++v)
      out << format_double(row.fraction, precision) << ',' << kNames[v] << ','
          << (row.phi[v].degenerate() ? "NA" : format_double(row.phi[v].mean, precision))
          << '\n';
    out << format_double(row.fraction, precision) << ",cronbach,"
        << (row.cronbach.degenerate() ? "NA" : format_double(row.cronbach.mean, precision))
        << '\n';
  }
  return out.str();
}

void print_sweep_grid(const std::vector<likert::SweepRow>& rows) {
  std::printf("%-10s", "fraction");
  for (const auto& row : rows) std::printf("%9.3g", row.fraction * 100.0);
  std::printf("\n");
  auto line = [&](const char* name, auto&& get) {
    std::printf("%-10s", name);
    for (const auto& row : rows) {
      const likert::SweepCell& c = get(row);
      if (c.degenerate())
        std::printf("%9s", "NA");
      else
        std::printf("%9.3f", c.mean);
    }
    std::printf("\n");
  };
  line("phi1", [](const auto& r) -> const likert::SweepCell& { return r.phi[0]; });
  line("phi2", [](const auto& r) -> const likert::SweepCell& { return r.phi[1]; });
  line("phi3", [](const auto& r) -> const likert::SweepCell& { return r.phi[2]; });
  line("phi4", [](const auto& r) -> const likert::SweepCell& { return r.phi[3]; });
  line("cronbach", [](const auto& r) -> const likert::SweepCell& { return r.cronbach; });
}

int run_simulate(const likert::SimConfig& cfg, const std::string& output,
                 const std::string& plot_output, const std::string& format,
                 int precision) {
  const auto rows = likert::run_sweep(cfg);
  if (format == "json") {
    write_output(likert::to_json(rows).dump(2) + "\n", output);
  } else {
    write_output(sweep_to_csv(rows, cfg.replicates, precision), output);
  }
  write_output(sweep_to_plot_csv(rows, precision), plot_output);
  print_sweep_grid(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability indices and information-theoretic distances for "
               "Likert-scale response matrices"};
  app.require_subcommand(1);

  // analyze
  std::string an_input, an_format = "json", an_output;
  int an_scale = 5, an_precision = 6;
  std::string an_delim = ",";
  double an_smoothing = 0.0;
  auto* analyze = app.add_subcommand(
      "analyze", "Compute the full reliability report for a response CSV");
  analyze->add_option("input", an_input, "input CSV path")->required();
  analyze->add_option("--scale", an_scale, "number of response levels K")
      ->capture_default_str();
  analyze->add_option("--format", an_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  analyze->add_option("--output", an_output, "write to file instead of stdout");
  analyze->add_option("--delimiter", an_delim, "input field delimiter")
      ->capture_default_str();
  analyze->add_option("--precision", an_precision, "significant digits for CSV output")
      ->capture_default_str();
  analyze->add_option("--smoothing", an_smoothing,
                      "additive smoothing for KL-based measures (none in this "
                      "report; accepted for flag symmetry)");

  // distances
  std::string di_input, di_output, di_measure;
  int di_scale = 5, di_precision = 6;
  std::string di_delim = ",";
  double di_smoothing = 0.0;
  const std::map<std::string, likert::PairwiseMeasure> measure_names{
      {"kl2", likert::PairwiseMeasure::symmetric_kl},
      {"vi", likert::PairwiseMeasure::variation_of_information},
      {"bc", likert::PairwiseMeasure::bhattacharyya},
      {"tv", likert::PairwiseMeasure::total_variation},
      {"hellinger", likert::PairwiseMeasure::hellinger}};
  auto* distances = app.add_subcommand(
      "distances", "Pairwise item distance matrix for a chosen measure");
  distances->add_option("input", di_input, "input CSV path")->required();
  distances->add_option("--measure", di_measure, "pairwise measure")
      ->required()
      ->check(CLI::IsMember({"kl2", "vi", "bc", "tv", "hellinger"}));
  distances->add_option("--scale", di_scale, "number of response levels K")
      ->capture_default_str();
  distances->add_option("--smoothing", di_smoothing,
                        "additive smoothing epsilon for kl2")
      ->check(CLI::NonNegativeNumber);
  distances->add_option("--output", di_output, "write to file instead of stdout");
  distances->add_option("--delimiter", di_delim, "input field delimiter")
      ->capture_default_str();
  distances->add_option("--precision", di_precision, "significant digits")
      ->capture_default_str();

  // simulate
  likert::SimConfig cfg;
  std::string si_output = "sweep.csv", si_plot, si_format = "csv";
  int si_scale = 5, si_precision = 6;
  auto* simulate = app.add_subcommand(
      "simulate", "Seeded benchmark sweep over duplicated-column fractions");
  simulate->add_option("--n", cfg.respondents, "respondents per matrix")
      ->capture_default_str();
  simulate->add_option("--p", cfg.items, "items per matrix")->capture_default_str();
  simulate->add_option("--scale", si_scale, "number of response levels K")
      ->capture_default_str();
  simulate->add_option("--fractions", cfg.fractions,
                       "duplicated-column fractions in (0,1]")
      ->delimiter(',');
  simulate->add_option("--seed", cfg.seed, "base RNG seed")->capture_default_str();
  simulate->add_option("--replicates", cfg.replicates, "matrices per fraction")
      ->capture_default_str();
  simulate->add_option("--output", si_output, "sweep CSV (or JSON) path")
      ->capture_default_str();
  simulate->add_option("--plot-data", si_plot,
                       "tidy plot CSV path (default: <output stem>_plot.csv)");
  simulate->add_option("--format", si_format, "sweep file format")
      ->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  simulate->add_option("--precision", si_precision, "significant digits")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      if (an_delim.size() != 1)
        throw Error(Errc::invalid_argument, "delimiter must be a single character");
      return run_analyze(an_input, an_scale, an_format, an_output, an_delim[0],
                         an_precision);
    }
    if (*distances) {
      if (di_delim.size() != 1)
        throw Error(Errc::invalid_argument, "delimiter must be a single character");
      return run_distances(di_input, di_scale, measure_names.at(di_measure),
                           di_smoothing, di_output, di_delim[0], di_precision);
    }
    if (*simulate) {
      cfg.scale = likert::LikertScale(si_scale);
      if (si_plot.empty()) {
        const auto dot = si_output.rfind('.');
        si_plot = si_output.substr(0, dot) + "_plot" +
                  (dot == std::string::npos ? ".csv" : si_output.substr(dot));
      }
      return run_simulate(cfg, si_output, si_plot, si_format, si_precision);
    }
  } catch (const Error& e) {
    std::cerr << "likert: " << e.what() << '\n';
    return likert::is_degenerate(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "likert: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
