#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace likert {

/// Stable identifiers for everything that can go wrong, grouped by kind:
/// parse/validation failures and degenerate computations. The names returned
/// by errc_name() are part of the CLI/JSON surface and never change.
enum class Errc {
  ragged_rows,
  out_of_range,
  invalid_cell,
  empty_input,
  too_few_items,
  too_few_respondents,
  degenerate_total_variance,
  index_out_of_range,
  support_mismatch,
  disjoint_support,
  degenerate_modal_entropy,
  invalid_argument,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ragged_rows:                return "RaggedRows";
    case Errc::out_of_range:               return "OutOfRange";
    case Errc::invalid_cell:               return "InvalidCell";
    case Errc::empty_input:                return "Empty";
    case Errc::too_few_items:              return "TooFewItems";
    case Errc::too_few_respondents:        return "TooFewRespondents";
    case Errc::degenerate_total_variance:  return "DegenerateTotalVariance";
    case Errc::index_out_of_range:         return "IndexOutOfRange";
    case Errc::support_mismatch:           return "SupportMismatch";
    case Errc::disjoint_support:           return "DisjointSupport";
    case Errc::degenerate_modal_entropy:   return "DegenerateModalEntropy";
    case Errc::invalid_argument:           return "InvalidArgument";
  }
  return "UnknownError";
}

/// True for errors that describe a well-formed input on which the requested
/// statistic is mathematically undefined (as opposed to bad input data).
constexpr bool is_degenerate(Errc code) noexcept {
  switch (code) {
    case Errc::degenerate_total_variance:
    case Errc::support_mismatch:
    case Errc::disjoint_support:
    case Errc::degenerate_modal_entropy:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code), message_(message) {}

  Errc code() const noexcept { return code_; }

  /// The description without the leading error name (for re-wrapping with
  /// extra context such as a file path).
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace likert
