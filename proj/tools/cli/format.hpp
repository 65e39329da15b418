#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hdet/types.hpp"

namespace hdet::cli {

/// Scientific notation, 15 significant digits, '.' separator regardless of
/// the global locale. Non-finite values print as nan/inf/-inf.
std::string format_double(double x);
std::string format_complex(cplx z);

/// Parses "1", "-0.5", "2i", "-i", "0.3+0.2i", "1e-3-4e-2i".
/// Throws std::invalid_argument.
cplx parse_complex(std::string_view text);

/// Comma-separated doubles, e.g. "0.5,1,2,5". Throws std::invalid_argument.
std::vector<double> parse_double_list(std::string_view text);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<double>& values);
  /// Leading integer column followed by doubles.
  void row(double param, int index, const std::vector<double>& values);

 private:
  std::ostream& out_;
};

}  // namespace hdet::cli
