#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/bounds.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/param.hpp"
#include "ezeta/precision.hpp"

namespace ezeta {

/// Named parameter values; std::map order is the tie-break order.
using ParamVector = std::map<std::string, Rational>;

// ---------------------------------------------------------------- objectives

/// q_rh, q_h, q_one, y0, yprime0, c0_strip.
const std::vector<std::string>& objective_ids();

/// Parameter names an objective reads. For q_h exactly one of beta and W is
/// given; W pins beta through the zero-free-region relation.
const std::vector<std::string>& objective_parameters(std::string_view objective_id);

bool objective_uses_ladder(std::string_view objective_id);

/// Evaluates an objective at exact parameters.
ConditionedBound evaluate_objective(std::string_view objective_id, const ParamVector& params,
                                    const LadderTable& ladder = {},
                                    const PrecisionContext& ctx = PrecisionContext());

// ----------------------------------------------------------------- optimize

struct ParamRange {
  Rational lo;
  Rational hi;
};

struct OptimizationProblem {
  std::string objective_id;
  ParamVector fixed;
  /// Free parameters and their closed ranges.
  std::map<std::string, ParamRange> box;
  LadderTable ladder;
  /// Condition ids that must hold; empty means every reported condition.
  std::vector<std::string> constraints;
  std::uint64_t seed = 0;
  int starts = 32;
  int evaluations_per_start = 1500;
  /// Extra start, e.g. published parameters.
  std::optional<ParamVector> initial;

  /// Usage error unless every objective parameter is fixed or free exactly
  /// once and every range is nonempty.
  void validate() const;
};

struct OptResult {
  ParamVector best;
  /// Objective at `best` under the verification context.
  ConditionedBound bound;
  long evaluations = 0;
  /// |value at doubled precision - value| / value.
  double doubled_relative_change = 0;
  /// Best binary64 value reached from each start, in start order.
  std::vector<double> trace;

  const CertifiedReal& value() const { return bound.value; }
};

/// Multi-start Nelder-Mead over the box with infeasible points rejected;
/// the winner is re-evaluated under `ctx` and at doubled precision.
OptResult optimize(const OptimizationProblem& problem,
                   const PrecisionContext& ctx = PrecisionContext());

/// Parses the key=value problem format:
///   objective = q_h
///   seed = 0
///   starts = 32
///   fixed.t0 = H
///   box.eta = 0.5, 6
///   ladder = 12:56.653, 13:52.306
///   constraints = tcond_not_RH1, W_gt_W0
OptimizationProblem parse_problem(std::string_view text);

// -------------------------------------------------------------------- tables

/// Table ids in the fixture file: Q, QRH, Y, Yprime, B1, Misc.
const std::vector<std::string>& table_ids();

std::string objective_for_row(const FixtureRow& row);
ParamVector params_for_row(const FixtureRow& row);
/// Ladder of a Y/Yprime row: published Q-table rows with W_j >= the row W.
LadderTable ladder_for_row(const FixtureRow& row, const FixtureSet& fixtures);
/// Search problem for a row, seeded also at its published parameters.
OptimizationProblem problem_for_row(const FixtureRow& row, const FixtureSet& fixtures,
                                    std::uint64_t seed = 0);

struct RowDiff {
  std::string table_id;
  std::string row_key;
  std::string published_text;
  double published = 0;
  std::optional<ConditionedBound> recomputed;
  double relative_diff = 0;
  double tolerance = 1e-2;
  /// Evaluation error, if any.
  std::string error;
  std::optional<OptResult> optimized;

  bool within_tolerance() const;
  bool conditions_ok() const;
  bool pass() const { return error.empty() && within_tolerance() && conditions_ok(); }
};

struct TableReport {
  std::string table_id;
  std::vector<RowDiff> rows;

  bool all_pass() const;
};

struct ReproduceOptions {
  bool optimize_rows = false;
  std::uint64_t seed = 0;
  /// Overrides per-row tolerances when set.
  std::optional<double> tolerance;
};

/// Recomputes every row of a table at its published parameters; optionally
/// re-optimizes each row and records the result.
TableReport reproduce_table(std::string_view table_id, const PrecisionContext& ctx,
                            const FixtureSet& fixtures = FixtureSet::shipped(),
                            const ReproduceOptions& options = {});

}  // namespace ezeta
