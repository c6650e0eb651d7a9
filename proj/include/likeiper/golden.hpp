#pragma once

// Golden tables: published numeric tables stored as text fixtures under
// data/golden/, recomputed and compared cell by cell.
//
// Fixture rows are `n<TAB>column<TAB>printed<TAB>expected_recomputed<TAB>reason`.
// `expected_recomputed` is "-" for ordinary cells; a value there marks the
// printed cell as a known misprint, and the recomputed value is checked
// against the override instead.
//
// Printed values were produced by dropping trailing digits as often as by
// rounding, so a cell matches when the recomputed value, either rounded or
// truncated to the printed number of decimals, reproduces the printed text.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "likeiper/big_real.hpp"
#include "likeiper/data_file.hpp"
#include "likeiper/lambda.hpp"
#include "likeiper/recurrences.hpp"
#include "likeiper/stieltjes.hpp"

namespace likeiper {

struct GoldenCell {
  int n;
  std::string column;
  std::string printed;  ///< normalized: no spaces, no '+'
  std::optional<std::string> override_value;
  std::string reason;
};

struct GoldenTable {
  int id = 0;
  std::string title;
  std::vector<GoldenCell> cells;

  const GoldenCell* find(int n, std::string_view column) const {
    for (const auto& c : cells) {
      if (c.n == n && c.column == column) return &c;
    }
    return nullptr;
  }
};

/// Strips blanks and a leading '+', and turns "0." into "0".
inline std::string normalize_printed(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '+') out.push_back(c);
  }
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

inline int printed_decimals(std::string_view s) {
  const auto dot = s.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

namespace detail {

inline std::string drop_negative_zero(std::string s) {
  if (!s.empty() && s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::vector<std::string> renderings(const BigReal& v, int decimals) {
  return {drop_negative_zero(v.to_fixed(decimals)), drop_negative_zero(v.to_fixed_truncated(decimals))};
}

inline std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.emplace_back(trim(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace detail

/// True when v and the printed literal agree at `decimals` places, each side
/// taken either rounded or truncated. With decimals < 0 the printed
/// literal's own decimal count is used.
inline bool printed_agrees(const BigReal& v, std::string_view printed, int decimals = -1) {
  const std::string p = normalize_printed(printed);
  if (decimals < 0) decimals = printed_decimals(p);
  const auto mine = detail::renderings(v, decimals);
  std::vector<std::string> theirs;
  if (printed_decimals(p) == decimals) {
    theirs.push_back(detail::drop_negative_zero(p));
  } else {
    theirs = detail::renderings(BigReal(p, std::max(v.digits(), decimals + 10)), decimals);
  }
  for (const auto& a : mine) {
    if (std::find(theirs.begin(), theirs.end(), a) != theirs.end()) return true;
  }
  return false;
}

inline GoldenTable parse_golden(std::string_view text, const std::string& name) {
  GoldenTable t;
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
      if (body.starts_with("table:")) {
        const std::string_view v = detail::trim(body.substr(6));
        const auto res = std::from_chars(v.data(), v.data() + v.size(), t.id);
        if (res.ec != std::errc()) throw ParseError(where() + "bad table directive");
      } else if (body.starts_with("title:")) {
        t.title = std::string(detail::trim(body.substr(6)));
      }
      continue;
    }
    if (line.starts_with("n\t")) continue;  // header
    const auto f = detail::split_tabs(line);
    if (f.size() != 5) throw ParseError(where() + "expected 5 tab-separated fields, got " + std::to_string(f.size()));
    GoldenCell c;
    const auto res = std::from_chars(f[0].data(), f[0].data() + f[0].size(), c.n);
    if (res.ec != std::errc() || res.ptr != f[0].data() + f[0].size() || c.n < 1) {
      throw ParseError(where() + "bad row index '" + f[0] + "'");
    }
    c.column = f[1];
    c.printed = normalize_printed(f[2]);
    if (c.printed.empty()) throw ParseError(where() + "empty printed value");
    if (f[3] != "-") c.override_value = normalize_printed(f[3]);
    c.reason = f[4] == "-" ? std::string() : f[4];
    if (t.find(c.n, c.column)) throw ParseError(where() + "duplicate cell");
    t.cells.push_back(std::move(c));
  }
  if (t.id < 1 || t.id > 5) throw ParseError(name + ": missing or invalid '# table:' directive");
  if (t.cells.empty()) throw ParseError(name + ": no cells");
  return t;
}

inline GoldenTable load_golden(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_golden(ss.str(), path);
}

/// Recomputes any cell of the five tables.
///
///   1: order2 = order-2 prediction of lambda_tiny(n)/(n gamma), exact = lambda_tiny(n)/(n gamma)
///   2: order3 = order-3 prediction, exact as in table 1
///   3: D = full-history prediction of lambda_tiny(n)/n, C = lambda_tiny(n)/n
///   4: E = full-history prediction of lambda_trend(n)/n (n = 1 is the seed
///      value itself), F = lambda_trend(n)/n
///   5: phi1, phi2 of the n log n family
class TableRecompute {
 public:
  TableRecompute(const StieltjesTable& stieltjes, int digits, int n_max = 15)
      : digits_(digits), lambdas_(lambda_table(n_max, digits, stieltjes)) {
    tiny_ = lambdas_.tinies();
    trend_ = lambdas_.trends();
  }

  int digits() const { return digits_; }
  const LambdaTable& lambdas() const { return lambdas_; }

  BigReal value(int table, int n, std::string_view column) const {
    const auto bad = [&] {
      return std::out_of_range("table " + std::to_string(table) + " has no cell (" + std::to_string(n) + ", " +
                               std::string(column) + ")");
    };
    if (n < 1) throw bad();
    if (table == 5) {
      const PhiPair p = phi_nlogn(n, digits_);
      if (column == "phi1") return p.phi1;
      if (column == "phi2") return p.phi2;
      throw bad();
    }
    if (n > lambdas_.n_max) throw bad();
    const std::span<const BigReal> tiny(tiny_);
    const std::span<const BigReal> trend(trend_);
    const BigReal& gamma = tiny_[1];
    switch (table) {
      case 1:
      case 2: {
        const BigReal scale = gamma * static_cast<long>(n);
        if (column == "exact") return tiny_[n] / scale;
        const int m = table == 1 ? 2 : 3;
        if (column != (table == 1 ? "order2" : "order3") || n < m) throw bad();
        return predict_order_m(tiny.first(static_cast<std::size_t>(n)), n, m) / scale;
      }
      case 3:
        if (column == "C") return tiny_[n] / static_cast<long>(n);
        if (column == "D" && n >= 2) return predict_full_history(tiny.first(static_cast<std::size_t>(n)), n) / static_cast<long>(n);
        throw bad();
      case 4:
        if (column == "F" || (column == "E" && n == 1)) return trend_[n] / static_cast<long>(n);
        if (column == "E") return predict_full_history(trend.first(static_cast<std::size_t>(n)), n) / static_cast<long>(n);
        throw bad();
      default:
        throw bad();
    }
  }

 private:
  int digits_;
  LambdaTable lambdas_;
  std::vector<BigReal> tiny_;
  std::vector<BigReal> trend_;
};

inline int golden_n_max(const GoldenTable& t) {
  int m = 1;
  for (const auto& c : t.cells) m = std::max(m, c.n);
  return m;
}

struct CellResult {
  GoldenCell cell;
  int decimals;
  std::string computed;   ///< recomputed value rounded to the printed decimals
  bool printed_match;     ///< recomputed value reproduces the printed text
  bool flagged;           ///< cell carries an override
  bool ok;                ///< printed_match, or the override matches for flagged cells
};

struct VerifyReport {
  int table;
  std::vector<CellResult> cells;

  int failures() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return !c.ok; }));
  }
  int flagged() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return c.flagged; }));
  }
  bool ok() const { return failures() == 0; }
};

inline VerifyReport verify_golden(const GoldenTable& t, const TableRecompute& rc) {
  VerifyReport rep{t.id, {}};
  for (const auto& c : t.cells) {
    const BigReal v = rc.value(t.id, c.n, c.column);
    const int dec = printed_decimals(c.printed);
    CellResult r{c, dec, detail::drop_negative_zero(v.to_fixed(dec)), printed_agrees(v, c.printed), false, false};
    if (c.override_value) {
      r.flagged = true;
      r.ok = printed_agrees(v, *c.override_value);
    } else {
      r.ok = r.printed_match;
    }
    rep.cells.push_back(std::move(r));
  }
  return rep;
}

}  // namespace likeiper
