#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ezeta/error.hpp"
#include "ezeta_cli/app.hpp"
#include "ezeta_cli/checks.hpp"
#include "ezeta_cli/report.hpp"

using namespace ezeta;
using namespace ezeta::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome ezeta_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Value of `column` in the first json-lines record whose `key_column`
/// equals `key` (or the first record when key is empty).
std::string field(const std::string& json_lines, const std::string& column,
                  const std::string& key_column = {}, const std::string& key = {}) {
  const Table t = parse_json_lines(json_lines);
  std::size_t col = t.columns.size(), key_col = t.columns.size();
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == column) col = i;
    if (t.columns[i] == key_column) key_col = i;
  }
  REQUIRE(col < t.columns.size());
  for (const auto& row : t.rows) {
    if (key_column.empty() || (key_col < row.size() && row[key_col].text == key)) return row[col].text;
  }
  FAIL("no matching record");
  return {};
}

const std::vector<std::string> kQ13 = {"--d",   "1/W0",     "--epsilon1", "0.041793", "--sigma1",
                                       "1.671118", "--eta", "3.367414", "--t0",       "H"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("EZETA_PRECISION", value, 1); }
  ~EnvGuard() { ::unsetenv("EZETA_PRECISION"); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(ErrorKind::usage) == exit_code::usage);
    CHECK(exit_code_for(ErrorKind::domain) == exit_code::usage);
    CHECK(exit_code_for(ErrorKind::pole) == exit_code::usage);
    CHECK(exit_code_for(ErrorKind::ladder_order) == exit_code::usage);
    CHECK(exit_code_for(ErrorKind::nonconvergence) == exit_code::verification_failed);
    CHECK(exit_code_for(ErrorKind::fixture) == exit_code::verification_failed);
    CHECK(exit_code::success == 0);
    CHECK(exit_code::condition_violated == 3);
  }

  TEST_CASE("csv and markdown escaping") {
    Table t{{"a", "b"}, {}};
    t.add({text_cell("x,y"), text_cell("say \"hi\"")});
    t.add({text_cell("p|q"), integer_cell(-4)});
    CHECK(render(t, OutputFormat::csv) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\np|q,-4\n");
    CHECK(render(t, OutputFormat::markdown) ==
          "| a | b |\n| --- | --- |\n| x,y | say \"hi\" |\n| p\\|q | -4 |\n");
    CHECK_THROWS_AS(t.add({text_cell("only one")}), Error);
    CHECK(parse_format("json-lines") == OutputFormat::json_lines);
    CHECK(format_name(OutputFormat::markdown) == "markdown");
    CHECK_THROWS_AS(parse_format("xml"), Error);
  }

  TEST_CASE("json-lines round trip of a table") {
    Table t{{"name", "count", "ok"}, {}};
    t.add({text_cell("1.6449340668482264e+00"), integer_cell(12), bool_cell(true)});
    t.add({text_cell("tab\tand \"quote\""), integer_cell(0), bool_cell(false)});
    const Table back = parse_json_lines(render(t, OutputFormat::json_lines));
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK_THROWS_AS(parse_json_lines("[1, 2]\n"), Error);
    CHECK_THROWS_AS(parse_json_lines("{\"a\": 1.5}\n"), Error);
  }

  TEST_CASE("json-lines round trip of command output") {
    const Outcome json = ezeta_run({"--format", "json-lines", "table", "QRH"});
    const Outcome csv = ezeta_run({"table", "QRH"});
    REQUIRE(json.code == 0);
    REQUIRE(csv.code == 0);
    CHECK(render(parse_json_lines(json.out), OutputFormat::csv) == csv.out);
  }

  TEST_CASE("eval zeta") {
    const Outcome two = ezeta_run({"--format", "json-lines", "eval", "zeta", "--sigma", "2", "--t", "0"});
    REQUIRE(two.code == 0);
    CHECK(field(two.out, "re_mid").rfind("1.6449340668482264", 0) == 0);

    const Outcome half = ezeta_run({"--format", "json-lines", "eval", "zeta", "--sigma", "0.5", "--t", "2"});
    REQUIRE(half.code == 0);
    CHECK(std::stod(field(half.out, "modulus_upper")) <= 1.461);

    const Outcome one = ezeta_run({"--format", "json-lines", "eval", "zeta", "--sigma", "1", "--t", "100"});
    REQUIRE(one.code == 0);
    CHECK(std::stod(field(one.out, "modulus_lower")) >= 1 / (30.812 * std::log(100.0)));

    const Outcome deriv = ezeta_run({"--format", "json-lines", "eval", "zeta", "--sigma", "2", "--t", "0",
                                     "--derivative"});
    REQUIRE(deriv.code == 0);
    CHECK(field(deriv.out, "re_mid").rfind("-9.375482543158437", 0) == 0);
  }

  TEST_CASE("eval zeta rejects the pole and the left half-plane") {
    const Outcome pole = ezeta_run({"eval", "zeta", "--sigma", "1", "--t", "0"});
    CHECK(pole.code == exit_code::usage);
    CHECK(pole.err.find("pole") != std::string::npos);
    CHECK(pole.out.empty());
    CHECK(ezeta_run({"eval", "zeta", "--sigma", "-1", "--t", "0"}).code == exit_code::usage);
  }

  TEST_CASE("eval stieltjes and sup") {
    const Outcome g = ezeta_run({"--format", "json-lines", "eval", "stieltjes", "--n", "1"});
    REQUIRE(g.code == 0);
    CHECK(field(g.out, "mid").rfind("-7.2815845483676", 0) == 0);
    CHECK(ezeta_run({"eval", "stieltjes", "--n", "100000"}).code == exit_code::usage);

    const std::vector<std::string> sup = {"--precision", "30", "eval", "sup", "--sigma", "0.5",
                                          "--t-lo", "0", "--t-hi", "1", "--claim"};
    CHECK(ezeta_run(concat(sup, {"1.461"})).code == 0);
    CHECK(ezeta_run(concat(sup, {"1.4"})).code == exit_code::verification_failed);
  }

  TEST_CASE("bound q_h at a published row") {
    const Outcome r = ezeta_run(concat({"--format", "json-lines", "bound", "q_h", "--w", "13"}, kQ13));
    REQUIRE(r.code == 0);
    const double value = std::stod(field(r.out, "value", "item", "value"));
    CHECK(std::abs(value / 52.306 - 1) < 1e-2);
    CHECK(field(r.out, "status", "item", "condition.W_gt_W0") == "ok");
  }

  TEST_CASE("bound q_h at the beta floor violates its conditions") {
    const Outcome r = ezeta_run(concat({"bound", "q_h", "--beta", "0.5"}, kQ13));
    CHECK(r.code == exit_code::condition_violated);
    CHECK(r.out.find("FAILED") != std::string::npos);
  }

  TEST_CASE("bound y0 for sigma >= 1") {
    const Outcome r = ezeta_run({"--format", "json-lines", "bound", "y0", "--sigma-ge-1", "--d1", "0.032871",
                                 "--sigma1", "1.662479", "--eta", "3.216997", "--t0", "13"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(field(r.out, "value", "item", "value")) / 30.812 - 1) < 1e-3);
  }

  TEST_CASE("usage errors") {
    CHECK(ezeta_run({}).code == exit_code::usage);
    CHECK(ezeta_run({"bound", "nope"}).code == exit_code::usage);
    CHECK(ezeta_run({"eval", "zeta", "--sigma"}).code == exit_code::usage);
    CHECK(ezeta_run({"eval", "zeta", "--sigma", "2", "--bogus", "1"}).code == exit_code::usage);
    CHECK(ezeta_run({"--format", "xml", "table", "B1"}).code == exit_code::usage);
    CHECK(ezeta_run({"verify", "nothing"}).code == exit_code::usage);
    CHECK(ezeta_run({"table", "nothing"}).code == exit_code::usage);
    CHECK(ezeta_run({"--help"}).code == exit_code::success);
  }

  TEST_CASE("precision from flag and environment") {
    CHECK(ezeta_run({"--precision", "20", "eval", "zeta", "--sigma", "2", "--t", "0"}).code ==
          exit_code::usage);
    EnvGuard env("20");
    CHECK(ezeta_run({"eval", "zeta", "--sigma", "2", "--t", "0"}).code == exit_code::usage);
    CHECK(ezeta_run({"--precision", "40", "eval", "zeta", "--sigma", "2", "--t", "0"}).code == 0);
  }

  TEST_CASE("verify") {
    const Outcome phi = ezeta_run({"verify", "phi"});
    CHECK(phi.code == 0);
    CHECK(phi.out.find("FAIL") == std::string::npos);
    const Outcome tight = ezeta_run({"verify", "tables", "--tolerance", "1e-12"});
    CHECK(tight.code == exit_code::verification_failed);
    CHECK(tight.err.find("verification failed") != std::string::npos);
  }

  TEST_CASE("output is stable across runs") {
    const std::vector<std::string> args = {"--seed", "3", "optimize", "--row", "B1/3", "--starts", "3",
                                           "--evaluations", "150"};
    const Outcome a = ezeta_run(args);
    const Outcome b = ezeta_run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("check runner") {
    std::vector<CheckTask> tasks = {
        {"b", [] { return std::vector<Check>{{"b.two", true, "", "", ""}, {"b.one", true, "", "", ""}}; }},
        {"a", []() -> std::vector<Check> { throw Error(ErrorKind::budget, "out of budget"); }},
    };
    const auto checks = run_checks(tasks);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].id == "a");
    CHECK_FALSE(checks[0].passed);
    CHECK(checks[1].id == "b.one");
    CHECK(checks[2].id == "b.two");
    CHECK(check_table(checks).rows.size() == 3);
    CHECK(suite_names().size() == 4);
  }
}
