#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/param.hpp"

namespace ezeta {

/// One published constant with the parameters it was computed from.
struct FixtureRow {
  std::string table_id;
  std::string row_key;
  /// Parameter text by name, in file order.
  std::vector<std::pair<std::string, std::string>> params;
  std::string published_text;
  Rational published;
  int line = 0;

  const std::string* find(std::string_view key) const;
  /// Parsed value of a parameter; fixture error when absent.
  Rational value(std::string_view key) const;
  std::optional<std::string> meta(std::string_view key) const;
};

/// Records of the form `table_id; row_key; key=value ...; published_value`.
/// Blank lines and lines starting with '#' are ignored.
class FixtureSet {
 public:
  static FixtureSet parse(std::string_view text);
  static FixtureSet load(const std::filesystem::path& path);
  /// The copy compiled into the library.
  static const FixtureSet& shipped();

  const std::vector<FixtureRow>& rows() const { return rows_; }
  std::vector<const FixtureRow*> table(std::string_view table_id) const;
  const FixtureRow* find(std::string_view table_id, std::string_view row_key) const;

 private:
  std::vector<FixtureRow> rows_;
};

}  // namespace ezeta
