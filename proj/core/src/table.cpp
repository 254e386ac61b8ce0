#include "triosc/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "triosc/errors.hpp"

namespace triosc {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw InvalidArgument("row has " + std::to_string(row.size()) + " cells, header has " +
                          std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

bool ResultTable::has_column(const std::string& name) const {
  return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

std::size_t ResultTable::column_index(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw MissingColumn("no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> ResultTable::numeric_column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    const double* v = std::get_if<double>(&row[c]);
    out.push_back(v ? *v : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

ResultTable ResultTable::select(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& n : names) idx.push_back(column_index(n));
  ResultTable out(names);
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<Cell> r;
    r.reserve(idx.size());
    for (std::size_t i : idx) r.push_back(row[i]);
    out.rows_.push_back(std::move(r));
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const ResultTable& table) {
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(cols[i]);
  }
  os << "\r\n";
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const double* v = std::get_if<double>(&row[i])) {
        os << format_number(*v);
      } else {
        os << csv_escape(std::get<std::string>(row[i]));
      }
    }
    os << "\r\n";
  }
}

std::string to_csv(const ResultTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

}  // namespace triosc
