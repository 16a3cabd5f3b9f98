#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cxrep/representation.hpp"

namespace cxrep {

/// One CSV field. `raw` is the exact source text including any quotes, so
/// untouched fields are written back byte for byte.
struct CsvField {
  std::string value;
  std::string raw;

  static CsvField from_value(std::string value);
};

using CsvRow = std::vector<CsvField>;

/// Comma separated, double-quote escaped, first record is the header.
struct CsvTable {
  CsvRow header;
  std::vector<CsvRow> rows;
  std::string line_ending = "\n";
};

CsvTable read_csv(std::istream& in);
void write_csv(std::ostream& out, const CsvTable& table);

/// Failure tied to a data cell. `row` is 1-based over data rows (the header
/// is row 0), `column` is the header name.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& what, std::size_t row, std::string column)
      : std::runtime_error(what), row_(row), column_(std::move(column)) {}

  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::string column_;
};

struct ColumnSpec {
  /// Header name or zero-based index.
  std::variant<std::string, std::size_t> column;
  Method method = Method::CartesianInterleave;
  bool normalize = false;
};

enum class Direction { Encode, Decode };

/// Encode replaces each spec'd complex column with `<col>__<method>` holding
/// the decimal code (or the normalized double). Decode accepts either the
/// encoded or the base name and restores `<col>` with canonical complex
/// literals. Other columns pass through untouched.
///
/// Throws ConfigError for unknown columns or decode with normalize, CsvError
/// for bad cells.
CsvTable transform_csv(const CsvTable& input, const std::vector<ColumnSpec>& specs,
                       Direction direction);

std::string encoded_column_name(const std::string& base, Method m);

}  // namespace cxrep
