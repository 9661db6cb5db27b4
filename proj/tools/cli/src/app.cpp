#include "ezeta_cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ezeta/bounds.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/numerics.hpp"
#include "ezeta/optimizer.hpp"
#include "ezeta/zeta_eval.hpp"
#include "ezeta_cli/checks.hpp"
#include "ezeta_cli/report.hpp"

namespace ezeta::cli {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::domain:
    case ErrorKind::pole:
    case ErrorKind::index_out_of_range:
    case ErrorKind::ladder_order:
    case ErrorKind::infeasible_box:
    case ErrorKind::precision_unreachable:
      return exit_code::usage;
    case ErrorKind::nonconvergence:
    case ErrorKind::zero_crossing:
    case ErrorKind::budget:
    case ErrorKind::fixture:
      return exit_code::verification_failed;
  }
  return exit_code::verification_failed;
}

namespace {

struct Globals {
  std::string format = "csv";
  std::optional<int> precision;
  std::string rounding = "outward";
  std::optional<std::uint64_t> seed;
  std::string fixture;
  int digits = 17;

  PrecisionContext context() const {
    const RoundingPolicy policy =
        rounding == "nearest" ? RoundingPolicy::nearest : RoundingPolicy::outward;
    return precision ? PrecisionContext(*precision, policy) : PrecisionContext::from_environment(policy);
  }
  FixtureSet fixtures() const {
    return fixture.empty() ? FixtureSet::shipped() : FixtureSet::load(fixture);
  }
  NumberFormat numbers() const { return {digits}; }
};

/// Two-column key/value report with radius and status.
class ItemReport {
 public:
  explicit ItemReport(NumberFormat nf) : nf_(nf) {}

  void text(std::string item, std::string value, std::string status = {}) {
    table_.add({text_cell(std::move(item)), text_cell(std::move(value)), text_cell(""),
                text_cell(std::move(status))});
  }
  void number(std::string item, const CertifiedReal& x, std::string status = {}) {
    table_.add({text_cell(std::move(item)), text_cell(nf_.mid(x)), text_cell(nf_.rad(x)),
                text_cell(std::move(status))});
  }
  void bound(const ConditionedBound& b) {
    number("value", b.value, b.certified ? "certified" : "nearest");
    text("upper", nf_.upper(b.value));
    text("region", b.region.describe());
    for (std::size_t i = 0; i < b.branches.size(); ++i) {
      number("branch." + b.branches[i].id, b.branches[i].value, i == b.selected ? "selected" : "");
    }
    for (const auto& c : b.conditions.entries()) {
      text("condition." + c.id, nf_.real(c.margin), c.satisfied ? "ok" : "FAILED");
    }
  }
  const Table& table() const { return table_; }

 private:
  NumberFormat nf_;
  Table table_{{"item", "value", "radius", "status"}, {}};
};

double parse_double(const std::string& text) { return parse_rational(text).get_d(); }

std::string lower_name(std::string s) {
  for (auto& c : s) c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// "--name value" and "--name=value" pairs left over by the option parser.
std::vector<std::pair<std::string, std::string>> parse_pairs(const std::vector<std::string>& args) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    require(a.rfind("--", 0) == 0 && a.size() > 2, ErrorKind::usage, "unexpected argument '" + a + "'");
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(a.substr(2, eq - 2), a.substr(eq + 1));
      continue;
    }
    require(i + 1 < args.size(), ErrorKind::usage, "missing value for " + a);
    out.emplace_back(a.substr(2), args[++i]);
  }
  return out;
}

// Parses "TABLE/KEY".
const FixtureRow& find_row(const FixtureSet& fixtures, const std::string& spec) {
  const auto slash = spec.find('/');
  require(slash != std::string::npos, ErrorKind::usage, "row is TABLE/KEY, e.g. Q/13");
  const FixtureRow* row = fixtures.find(spec.substr(0, slash), spec.substr(slash + 1));
  require(row != nullptr, ErrorKind::usage, "no fixture row " + spec);
  return *row;
}

// ------------------------------------------------------------------- bound

using Params = std::map<std::string, Rational>;

struct BoundOutput {
  /// The first entry is the headline value.
  std::vector<std::pair<std::string, CertifiedReal>> values;
  std::optional<ConditionedBound> bound;
  std::vector<std::pair<std::string, std::string>> notes;
};

const Rational& need(const Params& p, const std::string& name) {
  const auto it = p.find(name);
  require(it != p.end(), ErrorKind::usage, "missing parameter --" + name);
  return it->second;
}

struct Objective {
  std::string id;
  std::vector<std::string> params;
  bool uses_ladder = false;
  std::function<BoundOutput(Params&, const LadderTable&, const PrecisionContext&)> eval;
};

BoundOutput from_bound(ConditionedBound b) {
  BoundOutput out;
  out.values.emplace_back("value", b.value);
  out.bound = std::move(b);
  return out;
}

BoundOutput single(std::string name, CertifiedReal x) {
  BoundOutput out;
  out.values.emplace_back(std::move(name), std::move(x));
  return out;
}

const std::vector<Objective>& objectives() {
  static const std::vector<Objective> list = [] {
    std::vector<Objective> v;
    for (const auto& id : objective_ids()) {
      if (id == "q_h") continue;
      v.push_back({id, objective_parameters(id), objective_uses_ladder(id),
                   [id](Params& p, const LadderTable& ladder, const PrecisionContext& ctx) {
                     return from_bound(evaluate_objective(id, ParamVector(p.begin(), p.end()), ladder, ctx));
                   }});
    }
    v.push_back({"q_h", objective_parameters("q_h"), false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   BoundOutput out;
                   if (p.count("W") && p.count("beta")) {
                     out.notes.emplace_back("requested_W", format_rational(p.at("W"), 10));
                     p.erase("W");
                   }
                   const Rational beta = p.count("beta") ? p.at("beta")
                                                         : beta_for_W(need(p, "W"), need(p, "d"),
                                                                      need(p, "epsilon1"), need(p, "t0"));
                   const HBound hb = q_h({need(p, "d"), beta, need(p, "epsilon1"), need(p, "sigma1"),
                                          need(p, "eta"), need(p, "t0")},
                                         ctx);
                   out.values.emplace_back("value", hb.bound.value);
                   if (hb.W) out.values.emplace_back("W", *hb.W);
                   if (!p.count("beta")) out.notes.emplace_back("beta", format_rational(beta, 12));
                   out.bound = hb.bound;
                   return out;
                 }});
    v.push_back({"c3", {"t0"}, false, [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", c3(need(p, "t0"), ctx));
                 }});
    v.push_back({"c_backlund", {"sigma1", "t0", "k", "eta"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", c_backlund(need(p, "sigma1"), need(p, "t0"), need(p, "k"),
                                                     need(p, "eta"), ctx));
                 }});
    v.push_back({"v_factor", {"kappa", "sigma1", "t0", "eta"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", v_factor(need(p, "kappa"), need(p, "sigma1"), need(p, "t0"),
                                                   need(p, "eta"), ctx));
                 }});
    v.push_back({"phi", {"sigma", "k"}, false, [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   const Rational& k = need(p, "k");
                   require(k.get_den() == 1 && k > 0 && k <= 1000, ErrorKind::usage, "k is a positive integer");
                   const PhiValues v = phi_family(need(p, "sigma"), static_cast<int>(k.get_num().get_si()), ctx);
                   BoundOutput out = single("phi0", v.phi0);
                   out.values.emplace_back("phi1", v.phi1);
                   return out;
                 }});
    v.push_back({"phi2", {"sigma0"}, false, [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", phi2(need(p, "sigma0"), ctx));
                 }});
    v.push_back({"plp_strip", {"k1", "k2", "k3", "k4", "Q0", "delta_r", "sigma", "t", "t0"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   const KParams kp{need(p, "k1"), need(p, "k2"), need(p, "k3"),
                                    need(p, "k4"), need(p, "Q0"), need(p, "delta_r")};
                   return from_bound(plp_strip_bound(kp, need(p, "sigma"), need(p, "t"), need(p, "t0"), ctx));
                 }});
    v.push_back({"plp_cor", {"delta_r", "t0", "t"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return from_bound(plp_cor_bound(need(p, "delta_r"), need(p, "t0"), need(p, "t"), ctx));
                 }});
    v.push_back({"a_terms", {"sigma", "Q0", "t"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   const ATerms a = a_terms(need(p, "sigma"), need(p, "Q0"), need(p, "t"), ctx);
                   BoundOutput out = single("a0", a.a0);
                   out.values.emplace_back("a1", a.a1);
                   return out;
                 }});
    v.push_back({"trivial", {"sigma"}, false, [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   const TrivialBounds t = trivial_bounds(need(p, "sigma"), ctx);
                   BoundOutput out = single("zeta_upper", t.zeta_upper);
                   out.values.emplace_back("logderiv_upper", t.logderiv_upper);
                   out.values.emplace_back("recip_upper", t.recip_upper);
                   return out;
                 }});
    v.push_back({"aleks", {"sigma", "t"}, false, [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", aleks_bound(need(p, "sigma"), need(p, "t"), ctx));
                 }});
    v.push_back({"ladder_sum", {}, true, [](Params&, const LadderTable& ladder, const PrecisionContext& ctx) {
                   return single("value", ladder_sum(ladder, ctx));
                 }});
    v.push_back({"rescale_loglog", {"Q", "t_lo", "t_hi"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", rescale_loglog(need(p, "Q"), need(p, "t_lo"), need(p, "t_hi"), ctx));
                 }});
    v.push_back({"rescale_log_power", {"Q", "p", "t_lo", "t_hi"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext& ctx) {
                   return single("value", rescale_log_power(need(p, "Q"), need(p, "p"), need(p, "t_lo"),
                                                            need(p, "t_hi"), ctx));
                 }});
    v.push_back({"beta_for_W", {"W", "d", "epsilon1", "t0"}, false,
                 [](Params& p, const LadderTable&, const PrecisionContext&) {
                   BoundOutput out;
                   out.notes.emplace_back(
                       "beta", format_rational(beta_for_W(need(p, "W"), need(p, "d"), need(p, "epsilon1"),
                                                          need(p, "t0")),
                                               17));
                   return out;
                 }});
    std::sort(v.begin(), v.end(), [](const Objective& a, const Objective& b) { return a.id < b.id; });
    return v;
  }();
  return list;
}

const Objective& find_objective(const std::string& id) {
  for (const auto& o : objectives()) {
    if (o.id == id) return o;
  }
  std::string known;
  for (const auto& o : objectives()) known += (known.empty() ? "" : ", ") + o.id;
  raise(ErrorKind::usage, "unknown objective '" + id + "' (known: " + known + ")");
}

struct BoundArgs {
  std::string objective;
  std::string row;
  std::string ladder;
  std::string ladder_from;
  bool sigma_ge_1 = false;
};

LadderTable resolve_ladder(const BoundArgs& a, const FixtureSet& fixtures, const FixtureRow* row,
                           const std::string& objective) {
  auto with_spec = [&](const std::string& key, const std::string& spec) {
    FixtureRow pseudo;
    pseudo.table_id = "cli";
    pseudo.row_key = key;
    pseudo.params = {{"ladder", spec}};
    return ladder_for_row(pseudo, fixtures);
  };
  if (a.sigma_ge_1) return {};
  if (!a.ladder.empty()) return with_spec("0", a.ladder);
  if (!a.ladder_from.empty()) return with_spec(a.ladder_from, "Q");
  if (row != nullptr) return ladder_for_row(*row, fixtures);
  raise(ErrorKind::usage, objective + " needs a ladder: --ladder W:Q,..., --ladder-from W, --row or --sigma-ge-1");
}

int cmd_bound(const BoundArgs& a, const std::vector<std::string>& extras, const Globals& g,
              std::ostream& out) {
  const Objective& obj = find_objective(a.objective);
  const FixtureSet fixtures = g.fixtures();
  const FixtureRow* row = a.row.empty() ? nullptr : &find_row(fixtures, a.row);

  // Parameter text by canonical name, in the order given.
  std::vector<std::pair<std::string, std::string>> given;
  auto put = [&](const std::string& name, const std::string& text) {
    auto it = std::find_if(given.begin(), given.end(), [&](const auto& e) { return e.first == name; });
    if (it == given.end()) {
      given.emplace_back(name, text);
    } else {
      it->second = text;
    }
  };
  if (row != nullptr) {
    for (const auto& [key, text] : row->params) {
      if (key == "objective" || key == "ladder" || key == "tolerance") continue;
      put(key, text);
    }
  }
  for (const auto& [raw, text] : parse_pairs(extras)) {
    const std::string wanted = lower_name(raw);
    std::string name;
    for (const auto& p : obj.params) {
      if (lower_name(p) == wanted) name = p;
    }
    require(!name.empty(), ErrorKind::usage, obj.id + " has no parameter --" + raw);
    put(name, text);
  }
  Params params;
  for (const auto& [name, text] : given) {
    try {
      params[name] = parse_rational(text);
    } catch (const Error& e) {
      raise(ErrorKind::usage, "--" + name + ": " + e.what());
    }
  }

  const bool needs_ladder = obj.uses_ladder;
  const LadderTable ladder = needs_ladder ? resolve_ladder(a, fixtures, row, obj.id) : LadderTable{};
  const PrecisionContext ctx = g.context();
  const BoundOutput result = obj.eval(params, ladder, ctx);

  ItemReport report(g.numbers());
  report.text("objective", obj.id);
  for (const auto& [name, text] : given) report.text("param." + name, text);
  if (needs_ladder) report.text("ladder_size", std::to_string(ladder.size()));
  for (const auto& [name, text] : result.notes) report.text(name, text);
  if (result.bound) {
    report.bound(*result.bound);
    for (std::size_t i = 1; i < result.values.size(); ++i) {
      report.number(result.values[i].first, result.values[i].second);
    }
  } else {
    const bool certified = ctx.rounding_policy() == RoundingPolicy::outward;
    for (const auto& [name, x] : result.values) report.number(name, x, certified ? "certified" : "nearest");
  }
  render(report.table(), parse_format(g.format), out);
  return result.bound && !result.bound->valid() ? exit_code::condition_violated : exit_code::success;
}

// -------------------------------------------------------------------- eval

struct ZetaArgs {
  std::string sigma;
  std::string t = "0";
  bool derivative = false;
  unsigned order = 0;
  unsigned long terms = 0;
};

int cmd_eval_zeta(const ZetaArgs& a, const Globals& g, std::ostream& out) {
  const PrecisionContext ctx = g.context();
  const double sigma = parse_double(a.sigma), t = parse_double(a.t);
  EMOptions opts;
  opts.order = a.order;
  opts.N = a.terms;
  if (!(sigma > 0)) raise(ErrorKind::domain, "zeta needs sigma > 0");
  if (sigma == 1 && t == 0) raise(ErrorKind::pole, "zeta has a pole at s = 1");
  const CertifiedComplex s{CertifiedReal(sigma, ctx.bits()), CertifiedReal(t, ctx.bits())};
  const EMResult r = a.derivative ? em_zeta_deriv_enclosure(s, ctx, opts) : em_zeta_enclosure(s, ctx, opts);
  const NumberFormat nf = g.numbers();
  const CertifiedReal modulus = abs(r.value);
  Table table{{"function", "sigma", "t", "re_mid", "re_rad", "im_mid", "im_rad", "modulus_lower",
               "modulus_upper", "terms", "order"},
              {}};
  table.add({text_cell(a.derivative ? "zeta'" : "zeta"), text_cell(nf.real(sigma)), text_cell(nf.real(t)),
             text_cell(nf.mid(r.value.re)), text_cell(nf.rad(r.value.re)), text_cell(nf.mid(r.value.im)),
             text_cell(nf.rad(r.value.im)), text_cell(nf.lower(modulus)), text_cell(nf.upper(modulus)),
             integer_cell(static_cast<long long>(r.N)), integer_cell(r.order)});
  render(table, parse_format(g.format), out);
  return exit_code::success;
}

int cmd_eval_stieltjes(int n, const Globals& g, std::ostream& out) {
  const PrecisionContext ctx = g.context();
  const CertifiedReal gamma = stieltjes_constant(n, ctx);
  const CertifiedReal lavrik = lavrik_bound(n, ctx.bits());
  const NumberFormat nf = g.numbers();
  Table table{{"n", "mid", "rad", "lavrik_bound"}, {}};
  table.add({integer_cell(n), text_cell(nf.mid(gamma)), text_cell(nf.rad(gamma)), text_cell(nf.upper(lavrik))});
  render(table, parse_format(g.format), out);
  return exit_code::success;
}

struct SupArgs {
  std::string sigma;
  std::string t_lo;
  std::string t_hi;
  bool reciprocal = false;
  bool per_log_t = false;
  std::optional<double> claim;
  std::optional<double> grid;
};

int cmd_eval_sup(const SupArgs& a, const Globals& g, std::ostream& out) {
  const PrecisionContext ctx = g.context();
  const double sigma = parse_double(a.sigma), lo = parse_double(a.t_lo), hi = parse_double(a.t_hi);
  const SupTarget target = a.reciprocal ? SupTarget::reciprocal : SupTarget::modulus;
  const NumberFormat nf = g.numbers();
  Table table{{"sigma", "t_lo", "t_hi", "target", "mode", "lower", "upper", "argmax_t", "evaluations",
               "below_claim"},
              {}};
  const std::string target_name =
      std::string(a.reciprocal ? "1/|zeta|" : "|zeta|") + (a.per_log_t ? "/log t" : "");
  std::vector<Cell> row = {text_cell(nf.real(sigma)), text_cell(nf.real(lo)), text_cell(nf.real(hi)),
                           text_cell(target_name)};
  bool below = true;
  if (a.grid) {
    const GridResult r = grid_max_on_segment(sigma, lo, hi, *a.grid, target, a.per_log_t, ctx);
    below = !a.claim || r.max.upper_double() <= *a.claim;
    row.insert(row.end(), {text_cell("grid"), text_cell(nf.lower(r.max)), text_cell(nf.upper(r.max)),
                           text_cell(nf.real(r.argmax_t)), integer_cell(static_cast<long long>(r.nodes)),
                           bool_cell(a.claim && below)});
  } else {
    SupOptions opts;
    opts.target = target;
    opts.per_log_t = a.per_log_t;
    opts.claimed_bound = a.claim;
    const SupResult r = sup_modulus_on_segment(sigma, lo, hi, ctx, opts);
    below = !a.claim || r.below_claim;
    row.insert(row.end(), {text_cell(r.certified ? "certified" : "heuristic"), text_cell(nf.lower(r.value)),
                           text_cell(nf.upper(r.value)), text_cell(nf.real(r.argmax_t)),
                           integer_cell(static_cast<long long>(r.evaluations)), bool_cell(a.claim && below)});
  }
  table.add(std::move(row));
  render(table, parse_format(g.format), out);
  return below ? exit_code::success : exit_code::verification_failed;
}

// --------------------------------------------------------- table / optimize

std::string row_params(const FixtureSet& fixtures, const std::string& table_id, const std::string& key) {
  const FixtureRow* row = fixtures.find(table_id, key);
  if (row == nullptr) return {};
  std::string s;
  for (const auto& [k, v] : row->params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

std::string param_text(const ParamVector& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + format_rational(v, 10);
  return s;
}

Table diff_table(const TableReport& report, bool optimized, const FixtureSet& fixtures, const NumberFormat& nf) {
  Table table{{"table", "row", "params", "published", "recomputed", "radius", "rel_diff", "tolerance",
               "conditions", "status"},
              {}};
  if (optimized) table.columns.insert(table.columns.end(), {"optimized", "optimized_rel_diff", "optimized_params"});
  for (const auto& r : report.rows) {
    std::vector<Cell> cells = {text_cell(r.table_id), text_cell(r.row_key),
                               text_cell(row_params(fixtures, r.table_id, r.row_key)),
                               text_cell(r.published_text)};
    if (r.recomputed) {
      cells.insert(cells.end(), {text_cell(nf.mid(r.recomputed->value)), text_cell(nf.rad(r.recomputed->value)),
                                 text_cell(nf.real(r.relative_diff)), text_cell(NumberFormat{3}.real(r.tolerance)),
                                 text_cell(r.conditions_ok() ? "ok" : r.recomputed->conditions.failures())});
    } else {
      cells.insert(cells.end(), {text_cell(""), text_cell(""), text_cell(""), text_cell(NumberFormat{3}.real(r.tolerance)),
                                 text_cell(r.error)});
    }
    cells.push_back(text_cell(r.pass() ? "pass" : "FAIL"));
    if (optimized) {
      if (r.optimized) {
        const double v = r.optimized->value().mid_double();
        cells.insert(cells.end(), {text_cell(nf.mid(r.optimized->value())), text_cell(nf.real(v / r.published - 1)),
                                   text_cell(param_text(r.optimized->best))});
      } else {
        cells.insert(cells.end(), {text_cell(""), text_cell(""), text_cell("")});
      }
    }
    table.add(std::move(cells));
  }
  return table;
}

int cmd_table(const std::string& table_id, bool optimize_rows, std::optional<double> tolerance,
              const Globals& g, std::ostream& out) {
  const FixtureSet fixtures = g.fixtures();
  ReproduceOptions ro;
  ro.optimize_rows = optimize_rows;
  ro.seed = g.seed.value_or(0);
  ro.tolerance = tolerance;
  const TableReport report = reproduce_table(table_id, g.context(), fixtures, ro);
  render(diff_table(report, optimize_rows, fixtures, g.numbers()), parse_format(g.format), out);
  return exit_code::success;
}

struct OptimizeArgs {
  std::string config;
  std::string row;
  std::optional<int> starts;
  std::optional<int> evaluations;
};

int cmd_optimize(const OptimizeArgs& a, const Globals& g, std::ostream& out) {
  require(a.config.empty() != a.row.empty(), ErrorKind::usage, "optimize takes exactly one of --config and --row");
  const FixtureSet fixtures = g.fixtures();
  OptimizationProblem problem;
  const FixtureRow* row = nullptr;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    require(in.good(), ErrorKind::usage, "cannot read config " + a.config);
    std::ostringstream text;
    text << in.rdbuf();
    problem = parse_problem(text.str());
    if (g.seed) problem.seed = *g.seed;
  } else {
    row = &find_row(fixtures, a.row);
    problem = problem_for_row(*row, fixtures, g.seed.value_or(0));
  }
  if (a.starts) problem.starts = *a.starts;
  if (a.evaluations) problem.evaluations_per_start = *a.evaluations;
  const OptResult r = optimize(problem, g.context());

  const NumberFormat nf = g.numbers();
  ItemReport report(nf);
  report.text("objective", problem.objective_id);
  report.text("seed", std::to_string(problem.seed));
  report.text("starts", std::to_string(problem.starts));
  for (const auto& [name, v] : r.best) {
    report.text("param." + name, format_rational(v, 10), problem.box.count(name) ? "free" : "fixed");
  }
  if (row != nullptr) {
    report.text("published", row->published_text);
    report.text("relative_change", nf.real(r.value().mid_double() / row->published.get_d() - 1));
  }
  report.text("evaluations", std::to_string(r.evaluations));
  report.text("doubled_relative_change", nf.real(r.doubled_relative_change));
  report.bound(r.bound);
  render(report.table(), parse_format(g.format), out);
  return r.bound.valid() ? exit_code::success : exit_code::condition_violated;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, std::optional<double> tolerance, bool optimize_rows,
               const Globals& g, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.tolerance = tolerance;
  options.optimize = optimize_rows;
  options.seed = g.seed.value_or(0);
  options.numbers = g.numbers();
  const FixtureSet fixtures = g.fixtures();
  const PrecisionContext ctx = g.context();
  std::vector<CheckTask> tasks;
  for (const auto& name : suite_names()) {
    if (suite != "all" && suite != name) continue;
    auto more = suite_checks(name, ctx, fixtures, options);
    tasks.insert(tasks.end(), more.begin(), more.end());
  }
  require(!tasks.empty(), ErrorKind::usage, "unknown suite '" + suite + "'");
  const std::vector<Check> checks = run_checks(tasks);
  render(check_table(checks), parse_format(g.format), out);
  std::string failed;
  for (const auto& c : checks) {
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.id;
  }
  if (failed.empty()) return exit_code::success;
  err << "ezeta: verification failed: " << failed << '\n';
  return exit_code::verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds for the Riemann zeta function and its logarithmic derivative", "ezeta"};
  app.require_subcommand(1);
  app.fallthrough();
  // Bound parameters fall through to here; other commands reject them.
  app.allow_extras();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "markdown", "json-lines"}));
  app.add_option("--precision", g.precision, "Working precision in decimal digits (default: EZETA_PRECISION or 60)");
  app.add_option("--rounding", g.rounding, "Rounding policy")->check(CLI::IsMember({"outward", "nearest"}));
  app.add_option("--seed", g.seed, "Optimizer seed");
  app.add_option("--fixture", g.fixture, "Published-table fixture file (default: the built-in copy)");
  app.add_option("--digits", g.digits, "Significant digits in printed numbers")->check(CLI::Range(3, 200));

  auto* eval = app.add_subcommand("eval", "Evaluate zeta, Stieltjes constants or segment suprema");
  eval->require_subcommand(1);
  ZetaArgs zeta_args;
  auto* zeta = eval->add_subcommand("zeta", "Enclosure of zeta(sigma + it) or its derivative");
  zeta->add_option("--sigma", zeta_args.sigma)->required();
  zeta->add_option("--t", zeta_args.t);
  zeta->add_flag("--derivative", zeta_args.derivative, "Evaluate zeta'");
  zeta->add_option("--order", zeta_args.order, "Euler-Maclaurin order (0 = automatic)");
  zeta->add_option("--terms", zeta_args.terms, "Truncation point N (0 = automatic)");
  int stieltjes_n = 0;
  auto* stieltjes = eval->add_subcommand("stieltjes", "Stored enclosure of gamma_n");
  stieltjes->add_option("--n", stieltjes_n)->required()->check(CLI::NonNegativeNumber);
  SupArgs sup_args;
  auto* sup = eval->add_subcommand("sup", "Supremum of |zeta| or 1/|zeta| on a vertical segment");
  sup->add_option("--sigma", sup_args.sigma)->required();
  sup->add_option("--t-lo", sup_args.t_lo)->required();
  sup->add_option("--t-hi", sup_args.t_hi)->required();
  sup->add_flag("--reciprocal", sup_args.reciprocal);
  sup->add_flag("--per-log-t", sup_args.per_log_t);
  sup->add_option("--claim", sup_args.claim, "Bound to certify");
  sup->add_option("--grid", sup_args.grid, "Certified values on a grid with this step instead");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Evaluate a bound at given parameters (--name value ...)");
  bound->add_option("objective", bound_args.objective)->required();
  bound->add_option("--row", bound_args.row, "Start from a fixture row, e.g. Q/13");
  bound->add_option("--ladder", bound_args.ladder, "Ladder as W:Q,W:Q,...");
  bound->add_option("--ladder-from", bound_args.ladder_from, "Ladder of published Q rows with W_j >= this");
  bound->add_flag("--sigma-ge-1", bound_args.sigma_ge_1, "Empty ladder: the bound for sigma >= 1");
  bound->allow_extras();

  OptimizeArgs opt_args;
  auto* opt = app.add_subcommand("optimize", "Search bound parameters");
  opt->add_option("--config", opt_args.config, "Problem file (key = value)");
  opt->add_option("--row", opt_args.row, "Problem of a fixture row, e.g. Q/13");
  opt->add_option("--starts", opt_args.starts)->check(CLI::PositiveNumber);
  opt->add_option("--evaluations", opt_args.evaluations, "Evaluations per start")->check(CLI::PositiveNumber);

  std::string suite;
  std::optional<double> tolerance;
  bool verify_optimize = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "tables, small-t, phi, invariants or all")
      ->required()
      ->check(CLI::IsMember({"tables", "small-t", "phi", "invariants", "all"}));
  verify->add_option("--tolerance", tolerance, "Relative tolerance for table rows");
  verify->add_flag("--optimize", verify_optimize, "Also re-optimize every table row");

  std::string table_id;
  std::optional<double> table_tolerance;
  bool table_optimize = false;
  auto* table = app.add_subcommand("table", "Recompute a published table");
  table->add_option("table_id", table_id)->required()->check(CLI::IsMember(table_ids()));
  table->add_option("--tolerance", table_tolerance);
  table->add_flag("--optimize", table_optimize, "Re-optimize every row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  try {
    std::vector<std::string> extras = bound->remaining();
    for (const auto& e : app.remaining()) extras.push_back(e);
    if (!*bound && !extras.empty()) raise(ErrorKind::usage, "unexpected argument '" + extras.front() + "'");
    if (*eval) {
      if (*zeta) return cmd_eval_zeta(zeta_args, g, out);
      if (*stieltjes) return cmd_eval_stieltjes(stieltjes_n, g, out);
      return cmd_eval_sup(sup_args, g, out);
    }
    if (*bound) return cmd_bound(bound_args, extras, g, out);
    if (*opt) return cmd_optimize(opt_args, g, out);
    if (*verify) return cmd_verify(suite, tolerance, verify_optimize, g, out, err);
    return cmd_table(table_id, table_optimize, table_tolerance, g, out);
  } catch (const Error& e) {
    err << "ezeta: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "ezeta: " << e.what() << '\n';
    return exit_code::verification_failed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ezeta::cli
