#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace triosc {

using Cell = std::variant<double, std::string>;

/// Column-named table of numeric and text cells, written as CSV.
class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Throws InvalidArgument when the row width differs from the header.
  void add_row(std::vector<Cell> row);
  void reserve(std::size_t n) { rows_.reserve(n); }

  bool has_column(const std::string& name) const;
  /// Throws MissingColumn.
  std::size_t column_index(const std::string& name) const;
  /// Numeric values of a column; text cells become NaN.
  std::vector<double> numeric_column(const std::string& name) const;

  /// Keeps only the named columns, in the given order.
  ResultTable select(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// 17 significant digits, '.' decimal point, "nan"/"inf"/"-inf" for
/// non-finite values.
std::string format_number(double v);

/// RFC 4180: fields containing a comma, quote or line break are quoted.
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& os, const ResultTable& table);
std::string to_csv(const ResultTable& table);

}  // namespace triosc
