#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "likert/error.hpp"

namespace likert {

/// An ordered response scale with levels 1..K.
struct LikertScale {
  int levels;

  explicit LikertScale(int k) : levels(k) {
    if (k < 2) throw Error(Errc::invalid_argument, "scale needs at least 2 levels");
  }

  bool contains(int level) const noexcept { return level >= 1 && level <= levels; }
  friend bool operator==(LikertScale a, LikertScale b) noexcept { return a.levels == b.levels; }
};

/// Immutable n x p matrix of responses, one respondent per row, one item per
/// column, every entry in 1..K. All member functions are const and safe to
/// call concurrently on a shared instance.
class ResponseMatrix {
 public:
  ResponseMatrix(std::size_t respondents, std::size_t items, LikertScale scale,
                 std::vector<int> entries)
      : respondents_(respondents), items_(items), scale_(scale),
        entries_(std::move(entries)) {
    if (respondents_ == 0 || items_ == 0)
      throw Error(Errc::empty_input, "matrix must have at least one row and one column");
    if (entries_.size() != respondents_ * items_)
      throw Error(Errc::invalid_argument, "entry count does not match dimensions");
    for (std::size_t i = 0; i < respondents_; ++i) {
      for (std::size_t j = 0; j < items_; ++j) {
        if (!scale_.contains(entries_[i * items_ + j])) {
          throw Error(Errc::out_of_range,
                      "value " + std::to_string(entries_[i * items_ + j]) +
                          " at row " + std::to_string(i + 1) + ", column " +
                          std::to_string(j + 1) + " is outside 1.." +
                          std::to_string(scale_.levels));
        }
      }
    }
  }

  std::size_t respondent_count() const noexcept { return respondents_; }
  std::size_t item_count() const noexcept { return items_; }
  LikertScale scale() const noexcept { return scale_; }

  int operator()(std::size_t respondent, std::size_t item) const {
    return entries_[respondent * items_ + item];
  }

  std::span<const int> row(std::size_t respondent) const {
    return {entries_.data() + respondent * items_, items_};
  }

  std::span<const int> entries() const noexcept { return entries_; }

  ResponseMatrix transposed() const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < respondents_; ++i)
      for (std::size_t j = 0; j < items_; ++j)
        out[j * respondents_ + i] = entries_[i * items_ + j];
    return ResponseMatrix(items_, respondents_, scale_, std::move(out));
  }

  /// Serializes to delimiter-separated text, one respondent per line, no header.
  std::string to_csv(char delimiter = ',') const {
    std::string out;
    out.reserve(entries_.size() * 2);
    for (std::size_t i = 0; i < respondents_; ++i) {
      for (std::size_t j = 0; j < items_; ++j) {
        if (j) out.push_back(delimiter);
        out += std::to_string(entries_[i * items_ + j]);
      }
      out.push_back('\n');
    }
    return out;
  }

  friend bool operator==(const ResponseMatrix& a, const ResponseMatrix& b) noexcept {
    return a.respondents_ == b.respondents_ && a.items_ == b.items_ &&
           a.scale_ == b.scale_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t respondents_;
  std::size_t items_;
  LikertScale scale_;
  std::vector<int> entries_;
};

namespace detail {

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view token, int& out) noexcept {
  token = trim(token);
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Parses delimiter-separated integer rows into a validated ResponseMatrix.
/// A first row containing any non-integer token is treated as a header and
/// skipped. Row/column positions in error messages are 1-based and count the
/// header if one was present.
inline ResponseMatrix parse_csv(std::istream& in, LikertScale scale,
                                char delimiter = ',') {
  std::vector<int> entries;
  std::size_t columns = 0;
  std::size_t data_rows = 0;
  std::size_t line_no = 0;
  bool first_content_row = true;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;  // blank lines carry no row
    auto tokens = detail::split(line, delimiter);

    if (first_content_row) {
      // header = first row carrying a non-integer token; blank cells do not
      // qualify (missing values are a data error, not a header marker)
      bool header = false;
      int dummy = 0;
      for (auto tok : tokens) {
        if (!detail::trim(tok).empty() && !detail::parse_int(tok, dummy)) {
          header = true;
          break;
        }
      }
      first_content_row = false;
      if (header) continue;
    }

    if (columns == 0) {
      columns = tokens.size();
    } else if (tokens.size() != columns) {
      throw Error(Errc::ragged_rows,
                  "row " + std::to_string(line_no) + " has " +
                      std::to_string(tokens.size()) + " cells, expected " +
                      std::to_string(columns));
    }

    for (std::size_t j = 0; j < tokens.size(); ++j) {
      int value = 0;
      if (!detail::parse_int(tokens[j], value)) {
        throw Error(Errc::invalid_cell,
                    "cell at row " + std::to_string(line_no) + ", column " +
                        std::to_string(j + 1) + " is not an integer");
      }
      if (!scale.contains(value)) {
        throw Error(Errc::out_of_range,
                    "value " + std::to_string(value) + " at row " +
                        std::to_string(line_no) + ", column " +
                        std::to_string(j + 1) + " is outside 1.." +
                        std::to_string(scale.levels));
      }
      entries.push_back(value);
    }
    ++data_rows;
  }

  if (data_rows == 0) throw Error(Errc::empty_input, "no data rows");
  return ResponseMatrix(data_rows, columns, scale, std::move(entries));
}

inline ResponseMatrix parse_csv(std::string_view text, LikertScale scale,
                                char delimiter = ',') {
  std::istringstream in{std::string(text)};
  return parse_csv(in, scale, delimiter);
}

}  // namespace likert
