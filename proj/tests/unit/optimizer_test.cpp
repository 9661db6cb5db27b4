#include <string>

#include "doctest.h"
#include "ezeta/error.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/optimizer.hpp"
#include "support.hpp"

using namespace ezeta;

namespace {

Rational q(const char* text) { return parse_rational(text); }

ParamVector q13_params() {
  return {{"d", q("1/W0")},           {"beta", q("0.713814")}, {"epsilon1", q("0.041793")},
          {"sigma1", q("1.671118")}, {"eta", q("3.367414")},  {"t0", q("H")}};
}

constexpr const char* kStripProblem = R"(# B1 at t0 = 1000
objective = c0_strip
seed = 7
starts = 4
evaluations = 200
fixed.W = W0
fixed.sigma1 = 1
fixed.t0 = 1e3
box.eta = 0.1, 0.9
)";

}  // namespace

TEST_SUITE("optimizer") {
  TEST_CASE("objective registry") {
    CHECK(objective_ids().size() == 6);
    CHECK(objective_uses_ladder("y0"));
    CHECK_FALSE(objective_uses_ladder("q_h"));
    try {
      static_cast<void>(objective_parameters("nope"));
      FAIL("expected a usage error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::usage);
    }
  }

  TEST_CASE("q_h accepts W in place of beta") {
    ParamVector by_W = q13_params();
    by_W.erase("beta");
    by_W["W"] = 13;
    const ConditionedBound a = evaluate_objective("q_h", q13_params());
    const ConditionedBound b = evaluate_objective("q_h", by_W);
    CHECK(ezeta::test::rel_diff(b.value, a.value.mid_double()) < 1e-5);
    ParamVector both = q13_params();
    both["W"] = 13;
    CHECK_THROWS_AS(evaluate_objective("q_h", both), Error);
  }

  TEST_CASE("unknown parameters are rejected") {
    ParamVector p = q13_params();
    p["zeta"] = 1;
    CHECK_THROWS_AS(evaluate_objective("q_h", p), Error);
  }

  TEST_CASE("problem text format") {
    const OptimizationProblem p = parse_problem(kStripProblem);
    CHECK(p.objective_id == "c0_strip");
    CHECK(p.seed == 7);
    CHECK(p.starts == 4);
    CHECK(p.evaluations_per_start == 200);
    CHECK(p.box.at("eta").lo == q("0.1"));
    CHECK(p.fixed.at("t0") == 1000);
    CHECK_NOTHROW(p.validate());

    OptimizationProblem missing = p;
    missing.fixed.erase("W");
    CHECK_THROWS_AS(missing.validate(), Error);
    OptimizationProblem empty_box = p;
    empty_box.box["eta"] = {q("0.9"), q("0.1")};
    CHECK_THROWS_AS(empty_box.validate(), Error);
    CHECK_THROWS_AS(parse_problem("objective = q_h\nbox.eta = 1\n"), Error);
  }

  TEST_CASE("search is deterministic and feasible") {
    const OptimizationProblem p = parse_problem(kStripProblem);
    const OptResult a = optimize(p);
    const OptResult b = optimize(p);
    CHECK(a.best == b.best);
    CHECK(a.trace == b.trace);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.bound.valid());
    CHECK(a.value().upper_double() <= 0.2254 * 1.01);
    CHECK(a.doubled_relative_change < 1e-20);
  }

  TEST_CASE("row problems never do worse than the published parameters") {
    const FixtureSet& fixtures = FixtureSet::shipped();
    const FixtureRow& row = *fixtures.find("Q", "13");
    OptimizationProblem p = problem_for_row(row, fixtures);
    p.starts = 4;
    p.evaluations_per_start = 300;
    const OptResult r = optimize(p);
    CHECK(r.bound.valid());
    CHECK(r.value().upper_double() <= row.published.get_d() * 1.01);
  }

  TEST_CASE("table reproduction") {
    const TableReport qrh = reproduce_table("QRH", PrecisionContext());
    CHECK(qrh.rows.size() == 11);
    CHECK(qrh.all_pass());
    CHECK(table_ids().size() == 6);
    CHECK_THROWS_AS(reproduce_table("nope", PrecisionContext()), Error);
  }

  TEST_CASE("fixture parsing") {
    const FixtureSet set = FixtureSet::parse(
        "# comment\n\nB1; 3; W=W0 sigma1=1 t0=3 eta=2/3 tolerance=1e-3; 2.1173\n");
    REQUIRE(set.rows().size() == 1);
    const FixtureRow& row = set.rows()[0];
    CHECK(row.value("eta") == q("2/3"));
    CHECK(row.meta("tolerance") == std::string("1e-3"));
    CHECK(objective_for_row(row) == "c0_strip");
    CHECK_THROWS_AS(row.value("beta"), Error);
    CHECK_THROWS_AS(FixtureSet::parse("B1; 3; eta=2/3\n"), Error);
    CHECK(FixtureSet::shipped().table("Q").size() == 38);
    CHECK(FixtureSet::shipped().table("QRH").size() == 11);
  }
}
