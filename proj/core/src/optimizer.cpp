#include "ezeta/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "ezeta/error.hpp"
#include "objective_fast.hpp"

namespace ezeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
/// Binary64 margins may undershoot by this much; exact re-checks decide.
constexpr double kMarginSlack = 1e-12;
constexpr double kTieResolution = 1e-9;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    const std::string item = trim(s.substr(start, pos - start));
    if (!item.empty()) out.push_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Binary64 view of a problem: objective parameters split into fixed values
/// and free coordinates.
class SearchSpace {
 public:
  explicit SearchSpace(const OptimizationProblem& problem)
      : problem_(problem), index_(detail::objective_index(problem.objective_id)) {
    const auto& names = objective_parameters(problem.objective_id);
    base_.assign(names.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& name = names[i];
      if (const auto it = problem.fixed.find(name); it != problem.fixed.end()) {
        base_[i] = it->second.get_d();
      } else if (const auto box = problem.box.find(name); box != problem.box.end()) {
        if (box->second.lo == box->second.hi) {
          pinned_[name] = box->second.lo;
          base_[i] = box->second.lo.get_d();
        } else {
          free_.push_back({name, i, box->second});
        }
      }
    }
    std::vector<std::pair<double, double>> ladder;
    for (const auto& [W, Q] : problem.ladder.entries()) ladder.emplace_back(W.get_d(), Q.get_d());
    ladder_sum_ = detail::ladder_sum(Field<double>{}, ladder);
  }

  std::size_t dims() const { return free_.size(); }
  double lo(std::size_t j) const { return free_[j].range.lo.get_d(); }
  double hi(std::size_t j) const { return free_[j].range.hi.get_d(); }

  double score(const std::vector<double>& x) const {
    std::vector<double> full = base_;
    for (std::size_t j = 0; j < free_.size(); ++j) full[free_[j].slot] = x[j];
    try {
      const auto ev = detail::fast_objective(index_, full.data(), ladder_sum_);
      for (const auto& [id, margin] : ev.margins) {
        if (!constrained(id)) continue;
        if (!(margin >= -kMarginSlack)) return kInf;
      }
      const double value = detail::max_of(ev.branches);
      return std::isfinite(value) && value > 0 ? value : kInf;
    } catch (const Error&) {
      return kInf;
    }
  }

  void clamp(std::vector<double>& x) const {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::clamp(x[j], lo(j), hi(j));
  }

  /// Exact parameters for a binary64 point, clamped into the exact box.
  ParamVector exact(const std::vector<double>& x) const {
    ParamVector out = problem_.fixed;
    for (const auto& [name, value] : pinned_) out[name] = value;
    for (std::size_t j = 0; j < free_.size(); ++j) {
      Rational q = rational_from_double(x[j]);
      if (q < free_[j].range.lo) q = free_[j].range.lo;
      if (q > free_[j].range.hi) q = free_[j].range.hi;
      out[free_[j].name] = q;
    }
    return out;
  }

  std::vector<double> from_params(const ParamVector& p) const {
    std::vector<double> x(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) {
      const auto it = p.find(free_[j].name);
      require(it != p.end(), ErrorKind::usage, "initial point lacks '" + free_[j].name + "'");
      x[j] = it->second.get_d();
    }
    clamp(x);
    return x;
  }

  bool satisfied(const ConditionReport& report) const {
    if (problem_.constraints.empty()) return report.all_satisfied();
    for (const auto& id : problem_.constraints) {
      const auto* entry = report.find(id);
      if (entry == nullptr || !entry->satisfied) return false;
    }
    return true;
  }

 private:
  struct Coordinate {
    std::string name;
    std::size_t slot;
    ParamRange range;
  };

  bool constrained(std::string_view id) const {
    if (problem_.constraints.empty()) return true;
    return std::find(problem_.constraints.begin(), problem_.constraints.end(), id) !=
           problem_.constraints.end();
  }

  const OptimizationProblem& problem_;
  int index_;
  std::vector<double> base_;
  std::vector<Coordinate> free_;
  std::map<std::string, Rational> pinned_;
  double ladder_sum_ = 0;
};

struct LocalResult {
  std::vector<double> start;
  std::vector<double> x;
  double value = kInf;
  long evaluations = 0;
};

/// Nelder-Mead with box clamping, restarted from its own optimum until a
/// restart stops improving.
LocalResult nelder_mead(const SearchSpace& space, std::vector<double> start, int budget) {
  const std::size_t n = space.dims();
  LocalResult out;
  out.start = start;
  out.x = start;
  out.value = space.score(start);
  out.evaluations = 1;
  if (n == 0) return out;

  double step_fraction = 0.05;
  for (int restart = 0; restart < 4 && out.evaluations < budget; ++restart) {
    std::vector<std::vector<double>> simplex(n + 1, out.x);
    std::vector<double> values(n + 1, out.value);
    for (std::size_t j = 0; j < n; ++j) {
      const double step = step_fraction * (space.hi(j) - space.lo(j));
      auto& v = simplex[j + 1];
      v[j] = v[j] + step <= space.hi(j) ? v[j] + step : v[j] - step;
      space.clamp(v);
      values[j + 1] = space.score(v);
      ++out.evaluations;
    }
    std::vector<std::size_t> order(n + 1);
    while (out.evaluations < budget) {
      for (std::size_t i = 0; i <= n; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
      double diameter = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double width = space.hi(j) - space.lo(j);
          diameter = std::max(diameter, std::fabs(simplex[i][j] - simplex[best][j]) / width);
        }
      }
      const bool flat = std::isfinite(values[worst]) &&
                        values[worst] - values[best] <= 1e-13 * std::fabs(values[best]);
      if (diameter < 1e-11 || (flat && diameter < 1e-7)) break;

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);
      }
      auto along = [&](double coefficient) {
        std::vector<double> p(n);
        for (std::size_t j = 0; j < n; ++j) {
          p[j] = centroid[j] + coefficient * (simplex[worst][j] - centroid[j]);
        }
        space.clamp(p);
        return p;
      };
      auto reflected = along(-1.0);
      const double fr = space.score(reflected);
      ++out.evaluations;
      if (fr < values[best]) {
        auto expanded = along(-2.0);
        const double fe = space.score(expanded);
        ++out.evaluations;
        if (fe < fr) {
          simplex[worst] = std::move(expanded);
          values[worst] = fe;
        } else {
          simplex[worst] = std::move(reflected);
          values[worst] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
        continue;
      }
      auto contracted = fr < values[worst] ? along(-0.5) : along(0.5);
      const double fc = space.score(contracted);
      ++out.evaluations;
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
        continue;
      }
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best) continue;
        for (std::size_t j = 0; j < n; ++j) {
          simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
        }
        values[i] = space.score(simplex[i]);
        ++out.evaluations;
      }
    }
    const auto best_it = std::min_element(values.begin(), values.end());
    const double improvement = out.value - *best_it;
    if (*best_it < out.value) {
      out.value = *best_it;
      out.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
    }
    if (restart > 0 && !(improvement > 1e-12 * std::fabs(out.value))) break;
    step_fraction *= 0.2;
  }
  return out;
}

/// Deterministic uniform [0, 1) from a 64-bit engine.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::vector<double>> latin_hypercube(const SearchSpace& space, int count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = space.dims();
  std::vector<std::vector<double>> points(count, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> strata(count);
    for (int i = 0; i < count; ++i) strata[i] = i;
    for (int i = count - 1; i > 0; --i) {
      std::swap(strata[i], strata[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    for (int i = 0; i < count; ++i) {
      const double u = (strata[i] + unit(rng)) / count;
      points[i][j] = space.lo(j) + u * (space.hi(j) - space.lo(j));
    }
  }
  return points;
}

bool lexicographically_less(const ParamVector& a, const ParamVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

}  // namespace

void OptimizationProblem::validate() const {
  const auto& names = objective_parameters(objective_id);
  for (const auto& [name, range] : box) {
    require(std::find(names.begin(), names.end(), name) != names.end(), ErrorKind::usage,
            objective_id + " has no parameter '" + name + "'");
    require(fixed.count(name) == 0, ErrorKind::usage, "'" + name + "' is both fixed and free");
    require(range.lo <= range.hi, ErrorKind::usage, "empty range for '" + name + "'");
  }
  for (const auto& [name, value] : fixed) {
    require(std::find(names.begin(), names.end(), name) != names.end(), ErrorKind::usage,
            objective_id + " has no parameter '" + name + "'");
  }
  for (const auto& name : names) {
    const bool given = fixed.count(name) + box.count(name) > 0;
    const bool optional = objective_id == "q_h" && (name == "beta" || name == "W");
    require(given || optional, ErrorKind::usage, "parameter '" + name + "' is neither fixed nor free");
  }
  if (objective_id == "q_h") {
    const bool beta = fixed.count("beta") + box.count("beta") > 0;
    const bool W = fixed.count("W") + box.count("W") > 0;
    require(beta != W, ErrorKind::usage, "q_h takes exactly one of beta and W");
  }
  require(starts >= 1, ErrorKind::usage, "need at least one start");
  require(evaluations_per_start >= 1, ErrorKind::usage, "need a positive evaluation budget");
}

OptResult optimize(const OptimizationProblem& problem, const PrecisionContext& ctx) {
  problem.validate();
  const SearchSpace space(problem);

  std::vector<std::vector<double>> seeds;
  if (problem.initial) seeds.push_back(space.from_params(*problem.initial));
  for (auto& p : latin_hypercube(space, problem.starts, problem.seed)) seeds.push_back(std::move(p));

  std::vector<std::vector<double>> feasible;
  for (auto& s : seeds) {
    if (std::isfinite(space.score(s))) feasible.push_back(std::move(s));
  }
  require(!feasible.empty(), ErrorKind::infeasible_box,
          "no start point of the " + problem.objective_id + " box satisfies the constraints");

  // Starts are independent; results are merged in start order.
  std::vector<LocalResult> locals(feasible.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < feasible.size(); begin += workers) {
    const std::size_t end = std::min(feasible.size(), begin + workers);
    std::vector<std::future<LocalResult>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 nelder_mead, std::cref(space), feasible[i],
                                 problem.evaluations_per_start));
    }
    for (std::size_t i = begin; i < end; ++i) locals[i] = batch[i - begin].get();
  }

  OptResult result;
  struct Candidate {
    double value;
    ParamVector params;
    std::size_t local;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < locals.size(); ++i) {
    result.evaluations += locals[i].evaluations;
    result.trace.push_back(locals[i].value);
    candidates.push_back({locals[i].value, space.exact(locals[i].x), i});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    const double scale = std::max(std::fabs(a.value), std::fabs(b.value));
    if (std::fabs(a.value - b.value) > kTieResolution * scale) return a.value < b.value;
    return lexicographically_less(a.params, b.params);
  });

  // Exact re-check; a point that sits on a constraint boundary in binary64
  // is pulled back toward its start until the exact check passes.
  for (const auto& c : candidates) {
    const LocalResult& local = locals[c.local];
    for (int k = -1; k <= 40; ++k) {
      std::vector<double> x = local.x;
      if (k >= 0) {
        const double t = std::ldexp(1.0, k - 40);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += t * (local.start[j] - x[j]);
      }
      const ParamVector params = k < 0 ? c.params : space.exact(x);
      try {
        ConditionedBound bound = evaluate_objective(problem.objective_id, params, problem.ladder, ctx);
        if (!space.satisfied(bound.conditions)) continue;
        const ConditionedBound doubled =
            evaluate_objective(problem.objective_id, params, problem.ladder, ctx.doubled());
        const double v = bound.value.mid_double();
        result.doubled_relative_change = std::fabs(doubled.value.mid_double() - v) / std::fabs(v);
        result.best = params;
        result.bound = std::move(bound);
        return result;
      } catch (const Error&) {
        continue;
      }
    }
  }
  raise(ErrorKind::infeasible_box,
        "no optimized " + problem.objective_id + " point passes the exact condition checks");
}

OptimizationProblem parse_problem(std::string_view text) {
  OptimizationProblem p;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  std::vector<std::pair<Rational, Rational>> ladder;
  ParamVector initial;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = "problem line " + std::to_string(number);
    require(eq != std::string::npos, ErrorKind::usage, where + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "objective") {
      p.objective_id = value;
    } else if (key == "seed") {
      p.seed = std::stoull(value);
    } else if (key == "starts") {
      p.starts = std::stoi(value);
    } else if (key == "evaluations") {
      p.evaluations_per_start = std::stoi(value);
    } else if (key.rfind("fixed.", 0) == 0) {
      p.fixed[key.substr(6)] = parse_rational(value);
    } else if (key.rfind("initial.", 0) == 0) {
      initial[key.substr(8)] = parse_rational(value);
    } else if (key.rfind("box.", 0) == 0) {
      const auto bounds = split_list(value, ',');
      require(bounds.size() == 2, ErrorKind::usage, where + ": box needs 'lo, hi'");
      p.box[key.substr(4)] = {parse_rational(bounds[0]), parse_rational(bounds[1])};
    } else if (key == "ladder") {
      for (const auto& item : split_list(value, ',')) {
        const auto colon = item.find(':');
        require(colon != std::string::npos, ErrorKind::usage, where + ": ladder entries are W:Q");
        ladder.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
      }
    } else if (key == "constraints") {
      if (value != "all") p.constraints = split_list(value, ',');
    } else {
      raise(ErrorKind::usage, where + ": unknown key '" + key + "'");
    }
  }
  require(!p.objective_id.empty(), ErrorKind::usage, "problem lacks 'objective'");
  std::sort(ladder.begin(), ladder.end());
  p.ladder = LadderTable(std::move(ladder));
  if (!initial.empty()) p.initial = std::move(initial);
  p.validate();
  return p;
}

// -------------------------------------------------------------------- tables

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"Q", "QRH", "Y", "Yprime", "B1", "Misc"};
  return ids;
}

std::string objective_for_row(const FixtureRow& row) {
  if (row.table_id == "Q") return "q_h";
  if (row.table_id == "QRH") return "q_rh";
  if (row.table_id == "Y") return "y0";
  if (row.table_id == "Yprime") return "yprime0";
  if (row.table_id == "B1") return "c0_strip";
  const auto objective = row.meta("objective");
  require(objective.has_value(), ErrorKind::fixture,
          row.table_id + " row " + row.row_key + " names no objective");
  return *objective;
}

ParamVector params_for_row(const FixtureRow& row) {
  ParamVector out;
  for (const auto& [key, text] : row.params) {
    if (key == "objective" || key == "ladder" || key == "tolerance") continue;
    out[key] = parse_rational(text);
  }
  return out;
}

LadderTable ladder_for_row(const FixtureRow& row, const FixtureSet& fixtures) {
  const auto spec = row.meta("ladder");
  if (!spec || *spec == "none") return {};
  std::vector<std::pair<Rational, Rational>> entries;
  if (*spec == "Q") {
    const Rational W_min = parse_rational(row.row_key);
    for (const auto* q : fixtures.table("Q")) {
      const Rational W = parse_rational(q->row_key);
      if (W >= W_min) entries.emplace_back(W, q->published);
    }
  } else {
    for (const auto& item : split_list(*spec, ',')) {
      const auto colon = item.find(':');
      require(colon != std::string::npos, ErrorKind::fixture, "ladder entries are W:Q");
      entries.emplace_back(parse_rational(item.substr(0, colon)),
                           parse_rational(item.substr(colon + 1)));
    }
  }
  std::sort(entries.begin(), entries.end());
  return LadderTable(std::move(entries));
}

OptimizationProblem problem_for_row(const FixtureRow& row, const FixtureSet& fixtures,
                                    std::uint64_t seed) {
  OptimizationProblem p;
  p.objective_id = objective_for_row(row);
  p.seed = seed;
  p.ladder = ladder_for_row(row, fixtures);
  const ParamVector published = params_for_row(row);
  const auto r = [](const char* text) { return parse_rational(text); };
  auto free = [&](const char* name, const Rational& lo, const Rational& hi) {
    p.box[name] = {lo, hi};
  };
  auto fix = [&](const char* name) { p.fixed[name] = published.at(name); };

  const ParamRange sigma1_range{r("1.001"), r("2")};
  const ParamRange eta_range{r("0.5"), r("6")};
  if (p.objective_id == "q_h" || p.objective_id == "q_one") {
    fix("d");
    fix("t0");
    if (p.objective_id == "q_h") p.fixed["W"] = parse_rational(row.row_key);
    free("epsilon1", r("0.012524"), r("0.3"));
    p.box["sigma1"] = sigma1_range;
    p.box["eta"] = eta_range;
  } else if (p.objective_id == "q_rh") {
    fix("sigma0");
    fix("t0");
    fix("T");
    free("epsilon", r("1e-6"), r("0.5"));
    p.box["sigma1"] = sigma1_range;
    p.box["eta"] = eta_range;
  } else if (p.objective_id == "y0") {
    fix("t0");
    free("d1", r("0.005"), r("0.1"));
    p.box["sigma1"] = sigma1_range;
    p.box["eta"] = eta_range;
  } else if (p.objective_id == "yprime0") {
    fix("t0");
    free("d1", r("0.005"), r("0.1"));
  } else {
    fix("W");
    fix("sigma1");
    fix("t0");
    const Rational t0 = published.at("t0");
    free("eta", Rational(2 / t0), Rational(1 - 1 / t0));
  }
  ParamVector initial;
  for (const auto& [name, range] : p.box) {
    if (const auto it = published.find(name); it != published.end()) initial[name] = it->second;
  }
  if (initial.size() == p.box.size()) p.initial = std::move(initial);
  return p;
}

bool RowDiff::within_tolerance() const { return std::fabs(relative_diff) <= tolerance; }

bool RowDiff::conditions_ok() const { return recomputed && recomputed->valid(); }

bool TableReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowDiff& r) { return r.pass(); });
}

TableReport reproduce_table(std::string_view table_id, const PrecisionContext& ctx,
                            const FixtureSet& fixtures, const ReproduceOptions& options) {
  require(std::find(table_ids().begin(), table_ids().end(), table_id) != table_ids().end(),
          ErrorKind::usage, "unknown table '" + std::string(table_id) + "'");
  TableReport report;
  report.table_id = std::string(table_id);
  const auto rows = fixtures.table(table_id);
  require(!rows.empty(), ErrorKind::fixture, "fixture has no rows for table " + report.table_id);
  for (const auto* row : rows) {
    RowDiff diff;
    diff.table_id = row->table_id;
    diff.row_key = row->row_key;
    diff.published_text = row->published_text;
    diff.published = row->published.get_d();
    if (options.tolerance) {
      diff.tolerance = *options.tolerance;
    } else if (const auto tol = row->meta("tolerance")) {
      diff.tolerance = parse_rational(*tol).get_d();
    }
    try {
      diff.recomputed = evaluate_objective(objective_for_row(*row), params_for_row(*row),
                                           ladder_for_row(*row, fixtures), ctx);
      diff.relative_diff = diff.recomputed->value.mid_double() / diff.published - 1;
    } catch (const Error& e) {
      diff.error = e.what();
    }
    if (options.optimize_rows) {
      try {
        diff.optimized = optimize(problem_for_row(*row, fixtures, options.seed), ctx);
      } catch (const Error& e) {
        if (diff.error.empty()) diff.error = std::string("optimize: ") + e.what();
      }
    }
    report.rows.push_back(std::move(diff));
  }
  return report;
}

}  // namespace ezeta
