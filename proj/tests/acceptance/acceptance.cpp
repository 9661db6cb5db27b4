#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ezeta/bounds.hpp"
#include "ezeta/error.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/optimizer.hpp"
#include "ezeta/param.hpp"
#include "ezeta_cli/checks.hpp"

using namespace ezeta;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Verdict()> run;
};

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double worst_diff(const TableReport& report) {
  double worst = 0;
  for (const auto& r : report.rows) worst = std::max(worst, std::abs(r.relative_diff));
  return worst;
}

std::string failed_rows(const TableReport& report) {
  std::string out;
  for (const auto& r : report.rows) {
    if (!r.pass()) out += (out.empty() ? "" : ",") + r.table_id + "/" + r.row_key;
  }
  return out;
}

Verdict table_verdict(const TableReport& report, std::size_t expected_rows) {
  const bool ok = report.rows.size() == expected_rows && report.all_pass();
  std::string detail = std::to_string(report.rows.size()) + " rows, max |rel diff| " +
                       fmt(worst_diff(report), 3);
  if (!ok) detail += ", failed: " + failed_rows(report);
  return {ok, detail};
}

const RowDiff* find_row(const TableReport& report, const std::string& key) {
  for (const auto& r : report.rows) {
    if (r.row_key == key) return &r;
  }
  return nullptr;
}

Verdict suite_verdict(const std::vector<cli::Check>& checks) {
  std::string failed;
  for (const auto& c : checks) {
    if (!c.passed) failed += (failed.empty() ? "" : ",") + c.id;
  }
  std::string detail = std::to_string(checks.size()) + " checks";
  if (!failed.empty()) detail += ", failed: " + failed;
  return {failed.empty() && !checks.empty(), detail};
}

Verdict rows_within(const TableReport& report, const std::vector<std::string>& keys, double tol) {
  Verdict v{true, {}};
  for (const auto& key : keys) {
    const RowDiff* r = find_row(report, key);
    const bool ok = r && r->error.empty() && r->conditions_ok() && std::abs(r->relative_diff) <= tol;
    v.passed = v.passed && ok;
    v.detail += (v.detail.empty() ? "" : "; ") + key + " " +
                (r && r->recomputed ? fmt(r->recomputed->value.mid_double()) : std::string("n/a")) +
                (ok ? "" : " FAILED");
  }
  return v;
}

}  // namespace

int main() {
  const PrecisionContext ctx;
  const FixtureSet& fixtures = FixtureSet::shipped();
  cli::SuiteOptions suite_options;

  const std::vector<Criterion> criteria = {
      {1, "table Q reproduces within 1e-2", 10,
       [&] { return table_verdict(reproduce_table("Q", ctx, fixtures), 38); }},
      {2, "table QRH reproduces within 1e-2 with positive RH height margins", 5,
       [&] {
         const TableReport report = reproduce_table("QRH", ctx, fixtures);
         Verdict v = table_verdict(report, 11);
         double least = 1e300;
         for (const auto& r : report.rows) {
           const ConditionEntry* e = r.recomputed ? r.recomputed->conditions.find("tcond_RH1") : nullptr;
           least = e ? std::min(least, e->margin) : -1;
         }
         v.passed = v.passed && least > 0;
         v.detail += ", least tcond_RH1 margin " + fmt(least, 3);
         return v;
       }},
      {3, "tables Y and Yprime, and the sigma >= 1 constants", 5,
       [&] {
         const Verdict y = table_verdict(reproduce_table("Y", ctx, fixtures), 9);
         const Verdict yp = table_verdict(reproduce_table("Yprime", ctx, fixtures), 9);
         const Verdict misc = rows_within(reproduce_table("Misc", ctx, fixtures),
                                          {"y0_sigma_ge_1", "yprime0_sigma_ge_1", "q_one_sigma_ge_1"}, 1e-3);
         return Verdict{y.passed && yp.passed && misc.passed,
                        "Y: " + y.detail + "; Yprime: " + yp.detail + "; " + misc.detail};
       }},
      {4, "strip constants at t0 = 3 and 1e3 within 1e-3", 0,
       [&] { return rows_within(reproduce_table("B1", ctx, fixtures), {"3", "1e3"}, 1e-3); }},
      {5, "log log rescaling of 7.686 up to 1e6 gives 40.44", 0,
       [&] {
         const CertifiedReal v =
             rescale_loglog(parse_rational("7.686"), parse_rational("e^e"), parse_rational("1e6"), ctx);
         const bool ok = v.lower_double() >= 40.43 && v.upper_double() <= 40.45;
         return Verdict{ok, fmt(v.mid_double(), 8)};
       }},
      {6, "small-t certificates", 300,
       [&] { return suite_verdict(cli::run_checks(cli::small_t_checks(ctx, suite_options))); }},
      {7, "truncated Laurent sign and size conditions", 0,
       [&] { return suite_verdict(cli::run_checks(cli::phi_checks(ctx, suite_options))); }},
      {8, "optimizer matches every published row and is deterministic", 0,
       [&] {
         ReproduceOptions options;
         options.optimize_rows = true;
         Verdict v{true, {}};
         int rows = 0;
         std::string failed;
         for (const auto& id : table_ids()) {
           const TableReport first = reproduce_table(id, ctx, fixtures, options);
           const TableReport second = reproduce_table(id, ctx, fixtures, options);
           for (std::size_t i = 0; i < first.rows.size(); ++i) {
             ++rows;
             const auto& a = first.rows[i].optimized;
             const auto& b = second.rows[i].optimized;
             const bool ok = a && b && a->bound.valid() &&
                             a->value().upper_double() <= first.rows[i].published * 1.01 &&
                             a->best == b->best && a->trace == b->trace;
             if (!ok) failed += (failed.empty() ? "" : ",") + id + "/" + first.rows[i].row_key;
           }
         }
         v.passed = failed.empty();
         v.detail = std::to_string(rows) + " rows optimized twice" + (failed.empty() ? "" : ", failed: " + failed);
         return v;
       }},
      {9, "property suites", 0,
       [&] { return suite_verdict(cli::run_checks(cli::invariant_checks(ctx, fixtures, suite_options))); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const Error& e) {
      v = {false, e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed > c.time_limit_s) {
      v.passed = false;
      v.detail += ", over the " + fmt(c.time_limit_s, 3) + " s limit";
    }
    if (!v.passed) ++failures;
    std::printf("%s criterion %d: %s (%s) [%.2f s]\n", v.passed ? "PASS" : "FAIL", c.number,
                c.title.c_str(), v.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
