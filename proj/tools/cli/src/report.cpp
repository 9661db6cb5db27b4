#include "ezeta_cli/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "ezeta/error.hpp"
#include "json.hpp"

namespace ezeta::cli {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "json-lines") return OutputFormat::json_lines;
  raise(ErrorKind::usage, "unknown format '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::markdown:
      return "markdown";
    case OutputFormat::json_lines:
      return "json-lines";
  }
  return "csv";
}

Cell text_cell(std::string text) { return {std::move(text), Cell::Kind::text}; }
Cell integer_cell(long long value) { return {std::to_string(value), Cell::Kind::integer}; }
Cell bool_cell(bool value) { return {value ? "true" : "false", Cell::Kind::boolean}; }

void Table::add(std::vector<Cell> row) {
  require(row.size() == columns.size(), ErrorKind::usage, "row width does not match columns");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string markdown_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

ordered_json to_json(const Cell& cell) {
  switch (cell.kind) {
    case Cell::Kind::integer:
      return std::stoll(cell.text);
    case Cell::Kind::boolean:
      return cell.text == "true";
    case Cell::Kind::text:
      break;
  }
  return cell.text;
}

Cell from_json(const ordered_json& value) {
  if (value.is_boolean()) return bool_cell(value.get<bool>());
  if (value.is_number_integer()) return integer_cell(value.get<long long>());
  require(value.is_string(), ErrorKind::usage, "json-lines values must be strings, integers or booleans");
  return text_cell(value.get<std::string>());
}

}  // namespace

void render(const Table& table, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(table.columns[i]);
      }
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
        out << '\n';
      }
      break;
    }
    case OutputFormat::markdown: {
      out << '|';
      for (const auto& c : table.columns) out << ' ' << markdown_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
      out << '\n';
      for (const auto& row : table.rows) {
        out << '|';
        for (const auto& cell : row) out << ' ' << markdown_field(cell.text) << " |";
        out << '\n';
      }
      break;
    }
    case OutputFormat::json_lines: {
      for (const auto& row : table.rows) {
        ordered_json record = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) record[table.columns[i]] = to_json(row[i]);
        out << record.dump() << '\n';
      }
      break;
    }
  }
}

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream out;
  render(table, format, out);
  return out.str();
}

Table parse_json_lines(std::string_view text) {
  Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorKind::usage, std::string("bad json-lines record: ") + e.what());
    }
    require(record.is_object(), ErrorKind::usage, "json-lines record is not an object");
    if (table.columns.empty() && table.rows.empty()) {
      for (const auto& item : record.items()) table.columns.push_back(item.key());
    }
    std::vector<Cell> row;
    for (const auto& column : table.columns) {
      require(record.contains(column), ErrorKind::usage, "json-lines record lacks '" + column + "'");
      row.push_back(from_json(record.at(column)));
    }
    table.add(std::move(row));
  }
  return table;
}

std::string NumberFormat::mid(const CertifiedReal& x) const { return x.mid().to_string(digits); }
std::string NumberFormat::rad(const CertifiedReal& x) const {
  return x.rad().to_string(3, MPFR_RNDU);
}
std::string NumberFormat::lower(const CertifiedReal& x) const {
  return x.lower().to_string(digits, MPFR_RNDD);
}
std::string NumberFormat::upper(const CertifiedReal& x) const {
  return x.upper().to_string(digits, MPFR_RNDU);
}
std::string NumberFormat::real(double x) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace ezeta::cli
