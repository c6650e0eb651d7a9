#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/big_real.hpp"
#include "likeiper/constants.hpp"
#include "likeiper/data_file.hpp"

namespace likeiper {

/// Stieltjes constants gamma_0..gamma_K read from a data file. gamma_0 is
/// checked against the Euler-Mascheroni constant on load.
class StieltjesTable {
 public:
  StieltjesTable(std::vector<BigReal> entries, std::string source, int digits)
      : entries_(std::move(entries)), source_(std::move(source)), digits_(digits) {}

  int max_index() const { return static_cast<int>(entries_.size()) - 1; }
  const std::string& source() const { return source_; }
  /// Guaranteed digits per entry as declared by the file.
  int digits() const { return digits_; }
  int working_digits() const { return entries_.front().digits(); }

  /// gamma_k; throws DataError naming k when the table does not reach it.
  const BigReal& at(int k) const {
    if (k < 0 || k > max_index()) {
      throw DataError("Stieltjes constant gamma_" + std::to_string(k) + " missing (table covers 0.." +
                      std::to_string(max_index()) + ")");
    }
    return entries_[k];
  }

 private:
  std::vector<BigReal> entries_;
  std::string source_;
  int digits_;
};

inline StieltjesTable parse_stieltjes(std::string_view text, int digits, const std::string& name = "<stieltjes>") {
  IndexedFile f = parse_indexed(text, 0, name);
  auto values = to_reals(f, digits, name);
  const int declared = f.digits > 0 ? f.digits : digits;
  const int check = std::min(declared, digits) - 1;
  if (!agrees_to(values.front(), euler_gamma(digits), check)) {
    throw ValidationError(name + ": gamma_0 = " + values.front().to_fixed(std::min(check, 30)) +
                          " does not match Euler's constant to " + std::to_string(check) + " digits");
  }
  return StieltjesTable(std::move(values), f.source, declared);
}

inline StieltjesTable load_stieltjes(const std::string& path, int digits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_stieltjes(ss.str(), digits, path);
}

}  // namespace likeiper
