#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ezeta/fixtures.hpp"
#include "ezeta/precision.hpp"
#include "ezeta_cli/report.hpp"

namespace ezeta::cli {

/// Outcome of one verification check.
struct Check {
  std::string id;
  bool passed = false;
  std::string achieved;
  std::string required;
  std::string detail;
};

struct SuiteOptions {
  /// Overrides the per-row table tolerances.
  std::optional<double> tolerance;
  /// Also re-optimize every table row (no-regression check).
  bool optimize = false;
  std::uint64_t seed = 0;
  NumberFormat numbers;
};

/// A unit of work yielding one or more checks. An exception becomes a
/// failed check named `id`.
struct CheckTask {
  std::string id;
  std::function<std::vector<Check>()> run;
};

/// Runs tasks concurrently; the result is sorted by check id.
std::vector<Check> run_checks(const std::vector<CheckTask>& tasks);

/// Every table row against its published value (and optionally optimized).
std::vector<CheckTask> table_checks(const PrecisionContext& ctx, const FixtureSet& fixtures,
                                  const SuiteOptions& options);
/// Half-line supremum for |t| <= 3, the segment bounds near t = 500 and the
/// reciprocal grid on [2, 500].
std::vector<CheckTask> small_t_checks(const PrecisionContext& ctx, const SuiteOptions& options);
/// Sign and size conditions on the truncated Laurent quantities.
std::vector<CheckTask> phi_checks(const PrecisionContext& ctx, const SuiteOptions& options);
/// Soundness, monotonicity and consistency properties.
std::vector<CheckTask> invariant_checks(const PrecisionContext& ctx, const FixtureSet& fixtures,
                                      const SuiteOptions& options);

/// Suite names: tables, small-t, phi, invariants.
const std::vector<std::string>& suite_names();
std::vector<CheckTask> suite_checks(const std::string& suite, const PrecisionContext& ctx,
                                  const FixtureSet& fixtures, const SuiteOptions& options);

/// Columns: check, status, achieved, required, detail.
Table check_table(const std::vector<Check>& checks);

}  // namespace ezeta::cli
