#pragma once

// Reader for the indexed data files shipped under data/: UTF-8 text, one
// `k<TAB>decimal-literal` entry per line, '#' comments. Two comment
// directives are recognised: `# source: ...` and `# digits: N ...`.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "likeiper/big_real.hpp"

namespace likeiper {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file (syntax, indices, empty).
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

/// Well-formed file whose content fails a semantic check.
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

struct IndexedEntry {
  long index;
  std::string literal;
};

struct IndexedFile {
  std::string source;
  int digits = 0;  // 0 when the file does not declare it
  std::vector<IndexedEntry> entries;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses the text of an indexed file. Indices must start at `first_index`
/// and increase by one per entry.
inline IndexedFile parse_indexed(std::string_view text, long first_index, const std::string& name) {
  IndexedFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    const auto where = [&] { return name + ":" + std::to_string(lineno) + ": "; };
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = detail::trim(line.substr(1));
      if (body.starts_with("source:")) {
        out.source = std::string(detail::trim(body.substr(7)));
      } else if (body.starts_with("digits:")) {
        const std::string_view d = detail::trim(body.substr(7));
        int v = 0;
        const auto res = std::from_chars(d.data(), d.data() + d.size(), v);
        if (res.ec != std::errc() || v <= 0) throw ParseError(where() + "bad digits directive");
        out.digits = v;
      }
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(where() + "expected `k<TAB>value`");
    const std::string_view idx = detail::trim(line.substr(0, tab));
    const std::string_view val = detail::trim(line.substr(tab + 1));
    long k = 0;
    const auto res = std::from_chars(idx.data(), idx.data() + idx.size(), k);
    if (res.ec != std::errc() || res.ptr != idx.data() + idx.size()) {
      throw ParseError(where() + "bad index '" + std::string(idx) + "'");
    }
    const long expected = first_index + static_cast<long>(out.entries.size());
    if (k != expected) {
      throw ParseError(where() + "index " + std::to_string(k) + " out of sequence, expected " +
                       std::to_string(expected));
    }
    if (val.empty()) throw ParseError(where() + "missing value");
    out.entries.push_back({k, std::string(val)});
  }
  if (out.entries.empty()) throw ParseError(name + ": no entries");
  return out;
}

inline IndexedFile read_indexed(const std::string& path, long first_index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_indexed(ss.str(), first_index, path);
}

/// Converts the literals of a parsed file to BigReals at `digits`.
inline std::vector<BigReal> to_reals(const IndexedFile& f, int digits, const std::string& name) {
  std::vector<BigReal> out;
  out.reserve(f.entries.size());
  for (const auto& e : f.entries) {
    try {
      out.emplace_back(e.literal, digits);
    } catch (const std::invalid_argument&) {
      throw ParseError(name + ": entry " + std::to_string(e.index) + " is not a number: '" + e.literal + "'");
    }
  }
  return out;
}

}  // namespace likeiper
