#include "ezeta/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "embedded_data.hpp"
#include "ezeta/error.hpp"

namespace ezeta {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

const std::string* FixtureRow::find(std::string_view key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

Rational FixtureRow::value(std::string_view key) const {
  const auto* text = find(key);
  require(text != nullptr, ErrorKind::fixture,
          table_id + " row " + row_key + " lacks parameter '" + std::string(key) + "'");
  return parse_rational(*text);
}

std::optional<std::string> FixtureRow::meta(std::string_view key) const {
  if (const auto* text = find(key)) return *text;
  return std::nullopt;
}

FixtureSet FixtureSet::parse(std::string_view text) {
  FixtureSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split(body, ';');
    const std::string where = "fixture line " + std::to_string(number);
    require(fields.size() == 4, ErrorKind::fixture, where + ": expected 4 ';'-separated fields");
    FixtureRow row;
    row.table_id = fields[0];
    row.row_key = fields[1];
    row.line = number;
    std::istringstream words(fields[2]);
    std::string word;
    while (words >> word) {
      const auto eq = word.find('=');
      require(eq != std::string::npos && eq > 0, ErrorKind::fixture,
              where + ": expected key=value, got '" + word + "'");
      row.params.emplace_back(word.substr(0, eq), word.substr(eq + 1));
    }
    row.published_text = fields[3];
    try {
      row.published = parse_rational(row.published_text);
    } catch (const Error& e) {
      raise(ErrorKind::fixture, where + ": " + e.what());
    }
    require(!row.table_id.empty() && !row.row_key.empty(), ErrorKind::fixture,
            where + ": empty table id or row key");
    set.rows_.push_back(std::move(row));
  }
  return set;
}

FixtureSet FixtureSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::fixture, "fixture file missing: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const FixtureSet& FixtureSet::shipped() {
  static const FixtureSet set = parse(detail::embedded_published_tables());
  return set;
}

std::vector<const FixtureRow*> FixtureSet::table(std::string_view table_id) const {
  std::vector<const FixtureRow*> out;
  for (const auto& r : rows_) {
    if (r.table_id == table_id) out.push_back(&r);
  }
  return out;
}

const FixtureRow* FixtureSet::find(std::string_view table_id, std::string_view row_key) const {
  for (const auto& r : rows_) {
    if (r.table_id == table_id && r.row_key == row_key) return &r;
  }
  return nullptr;
}

}  // namespace ezeta
