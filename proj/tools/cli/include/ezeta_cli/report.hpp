#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/certified.hpp"

namespace ezeta::cli {

enum class OutputFormat { csv, markdown, json_lines };

/// Usage error for anything other than csv, markdown, json-lines.
OutputFormat parse_format(std::string_view name);
std::string_view format_name(OutputFormat format);

/// A rendered value. Decimal numbers stay text so no format loses digits;
/// integers and booleans become native JSON values.
struct Cell {
  enum class Kind { text, integer, boolean };
  std::string text;
  Kind kind = Kind::text;

  friend bool operator==(const Cell&, const Cell&) = default;
};

Cell text_cell(std::string text);
Cell integer_cell(long long value);
Cell bool_cell(bool value);

/// Rows of cells under fixed columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  friend bool operator==(const Table&, const Table&) = default;
};

void render(const Table& table, OutputFormat format, std::ostream& out);
std::string render(const Table& table, OutputFormat format);

/// Inverse of json-lines rendering; columns come from the first record.
Table parse_json_lines(std::string_view text);

/// Decimal rendering of numbers with a fixed number of significant digits.
struct NumberFormat {
  int digits = 17;

  std::string mid(const CertifiedReal& x) const;
  /// Radius rounded up to three digits.
  std::string rad(const CertifiedReal& x) const;
  std::string lower(const CertifiedReal& x) const;
  std::string upper(const CertifiedReal& x) const;
  std::string real(double x) const;
};

}  // namespace ezeta::cli
