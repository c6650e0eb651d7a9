#pragma once

// Delimited text output. TSV is the default (gnuplot reads it directly);
// CSV follows RFC 4180 quoting.

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace likeiper {

enum class OutputFormat { kTsv, kCsv };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "tsv") return OutputFormat::kTsv;
  if (s == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv or tsv)");
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) {
    if (row.size() != header.size()) throw std::logic_error("TextTable: row width does not match header");
    rows.push_back(std::move(row));
  }
};

namespace detail {

inline void put_field(std::ostream& os, const std::string& f, OutputFormat fmt) {
  if (fmt == OutputFormat::kTsv) {
    if (f.find_first_of("\t\n") != std::string::npos) throw std::invalid_argument("TSV field contains tab/newline");
    os << f;
    return;
  }
  if (f.find_first_of(",\"\n\r") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char c : f) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

inline void put_row(std::ostream& os, const std::vector<std::string>& row, OutputFormat fmt) {
  const char sep = fmt == OutputFormat::kTsv ? '\t' : ',';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << sep;
    put_field(os, row[i], fmt);
  }
  os << '\n';
}

}  // namespace detail

/// Comment lines (prefixed "# ") are written only for TSV.
inline void write_table(std::ostream& os, const TextTable& t, OutputFormat fmt,
                        const std::vector<std::string>& comments = {}) {
  if (fmt == OutputFormat::kTsv) {
    for (const auto& c : comments) os << "# " << c << '\n';
  }
  detail::put_row(os, t.header, fmt);
  for (const auto& r : t.rows) detail::put_row(os, r, fmt);
}

}  // namespace likeiper
