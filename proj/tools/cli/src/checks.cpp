#include "ezeta_cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <future>
#include <random>
#include <thread>

#include "ezeta/bounds.hpp"
#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"
#include "ezeta/numerics.hpp"
#include "ezeta/optimizer.hpp"
#include "ezeta/zeta_eval.hpp"

namespace ezeta::cli {

namespace {

std::string sci(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, x);
  return buf;
}

Check make_check(std::string id, bool passed, std::string achieved, std::string required,
                 std::string detail = {}) {
  return {std::move(id), passed, std::move(achieved), std::move(required), std::move(detail)};
}

CertifiedReal enclose_q(const Rational& q, const PrecisionContext& ctx) {
  return CertifiedReal::parse(q.get_str(), ctx.bits());
}

// Unit draw from the top 53 bits of a 64-bit word; identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// lo + (hi - lo) i / steps for i from 0 (or 1) to steps.
std::vector<Rational> grid(const Rational& lo, const Rational& hi, int steps, bool include_lo) {
  std::vector<Rational> out;
  for (int i = include_lo ? 0 : 1; i <= steps; ++i) {
    out.push_back(Rational(lo + (hi - lo) * Rational(i, steps)));
  }
  return out;
}

// ------------------------------------------------------------------ tables

std::vector<Check> table_rows(const std::string& table_id, const PrecisionContext& ctx,
                              const FixtureSet& fixtures, const SuiteOptions& options) {
  ReproduceOptions ro;
  ro.optimize_rows = options.optimize;
  ro.seed = options.seed;
  ro.tolerance = options.tolerance;
  const TableReport report = reproduce_table(table_id, ctx, fixtures, ro);
  std::vector<Check> out;
  for (const auto& row : report.rows) {
    const std::string key = row.table_id + "." + row.row_key;
    std::string detail;
    if (!row.error.empty()) {
      detail = row.error;
    } else {
      detail = "recomputed " + options.numbers.mid(row.recomputed->value) + " vs published " +
               row.published_text;
      if (!row.conditions_ok()) detail += "; failed: " + row.recomputed->conditions.failures();
    }
    out.push_back(make_check("tables." + key, row.pass(), sci(std::fabs(row.relative_diff)),
                             "<= " + sci(row.tolerance), detail));
    if (!options.optimize) continue;
    const double allowed = 1 + options.tolerance.value_or(1e-2);
    if (!row.optimized) {
      out.push_back(make_check("optimize." + key, false, "-", "<= " + sci(allowed), row.error));
      continue;
    }
    const auto& opt = *row.optimized;
    const double ratio = opt.value().upper_double() / row.published;
    const bool ok = opt.bound.valid() && ratio <= allowed;
    out.push_back(make_check("optimize." + key, ok, sci(ratio, 6), "<= " + sci(allowed),
                             "optimized " + options.numbers.mid(opt.value()) +
                                 (opt.bound.valid() ? "" : "; failed: " + opt.bound.conditions.failures())));
  }
  return out;
}

// ----------------------------------------------------------------- small-t

Check half_line_sup(const PrecisionContext& ctx, const NumberFormat& nf) {
  const double claim = parse_rational(literal::small_t_half_line).get_d();
  SupOptions opts;
  opts.claimed_bound = claim;
  // |zeta(1/2 - it)| = |zeta(1/2 + it)|, so [0, 3] covers |t| <= 3.
  const SupResult r = sup_modulus_on_segment(0.5, 0.0, 3.0, ctx, opts);
  const bool ok = r.certified && r.value.upper_double() <= claim;
  return make_check("small_t.half_line_sup", ok, nf.upper(r.value), "<= 1.461",
                    "certified=" + std::string(r.certified ? "yes" : "no") + ", " +
                        std::to_string(r.evaluations) + " evaluations, argmax t=" + nf.real(r.argmax_t));
}

Check segment_rescale(const std::string& id, const Rational& p, const Rational& t_lo,
                      const Rational& t_hi, const std::string& claim, const PrecisionContext& ctx,
                      const NumberFormat& nf) {
  // 4/(sigma - 1/2) = 8 on the line sigma = 1.
  const Rational eight(8);
  const bool base_ok = aleks_bound(Rational(1), t_lo, ctx).upper() <= enclose_q(eight, ctx).lower();
  const CertifiedReal c = rescale_log_power(eight, p, t_lo, t_hi, ctx);
  const bool ok = base_ok && c.upper() <= CertifiedReal::parse(claim, ctx.bits()).lower();
  return make_check(id, ok, nf.upper(c), "<= " + claim,
                    "8 / (log t)^" + format_rational(p, 6) + " on [" + format_rational(t_lo, 6) +
                        ", 2exp(e^2)]");
}

Check reciprocal_grid(const PrecisionContext& ctx, const NumberFormat& nf) {
  const GridResult g = grid_max_on_segment(1.0, 2.0, 500.0, 0.05, SupTarget::reciprocal, true, ctx);
  const bool ok = g.max.upper_double() <= 2.079;
  return make_check("small_t.reciprocal_grid", ok, nf.upper(g.max), "<= 2.079",
                    std::to_string(g.nodes) + " certified nodes, step 0.05, argmax t=" +
                        nf.real(g.argmax_t));
}

Check reciprocal_power(const PrecisionContext& ctx, const NumberFormat& nf) {
  // 2.079 log t <= c (log t)^{11/12} on [2, 500], worst at t = 500.
  const CertifiedReal c = rescale_log_power(parse_rational(literal::small_t_reciprocal),
                                            Rational(-1, 12), Rational(2), Rational(500), ctx);
  const bool ok = c.upper_double() <= 2.421;
  return make_check("small_t.reciprocal_power", ok, nf.upper(c), "<= 2.421",
                    "2.079 (log 500)^{1/12}");
}

// --------------------------------------------------------------------- phi

Check phi0_grid(const Rational& sigma_k, int k, const PrecisionContext& ctx, const NumberFormat& nf) {
  CertifiedReal lowest(1e300, ctx.bits());
  Rational at;
  const auto pts = grid(Rational(1), sigma_k, 200, false);
  for (const auto& s : pts) {
    const PhiValues v = phi_family(s, k, ctx);
    if (v.phi0.lower() < lowest.lower()) {
      lowest = v.phi0;
      at = s;
    }
  }
  const bool ok = lowest.lower().sign() >= 0;
  return make_check("phi.phi0_nonnegative.k" + std::to_string(k), ok, nf.lower(lowest), ">= 0",
                    std::to_string(pts.size()) + " points on (1, " + format_rational(sigma_k, 6) +
                        "], min at sigma=" + format_rational(at, 6));
}

Check phi1_below_one(const PrecisionContext& ctx, const NumberFormat& nf) {
  CertifiedReal highest(-1e300, ctx.bits());
  const auto pts = grid(Rational(1), Rational(183, 100), 166, false);
  for (const auto& s : pts) {
    const PhiValues v = phi_family(s, 3, ctx);
    if (v.phi1.upper() > highest.upper()) highest = v.phi1;
  }
  const bool ok = highest.upper_double() < 1;
  return make_check("phi.phi1_below_one", ok, nf.upper(highest), "< 1",
                    std::to_string(pts.size()) + " points on (1, 1.83], k=3");
}

Check phi2_floor(const PrecisionContext& ctx, const NumberFormat& nf) {
  const CertifiedReal floor = CertifiedReal::parse(literal::logderiv_real_floor, ctx.bits());
  CertifiedReal highest(-1e300, ctx.bits());
  bool floor_holds = true;
  const auto pts = grid(Rational(148, 100), Rational(3, 2), 100, true);
  for (const auto& s : pts) {
    const PhiValues v = phi_family(s, 10, ctx);
    if (v.phi1.upper() > highest.upper()) highest = v.phi1;
    const CertifiedReal p2 = phi2(s, ctx);
    floor_holds = floor_holds && p2.lower() <= floor.upper() && floor.lower() <= p2.upper();
  }
  const bool ok = floor_holds && highest.upper() <= floor.lower();
  return make_check("phi.phi2_floor", ok, nf.upper(highest), "<= 0.852",
                    "phi1(sigma,10) on " + std::to_string(pts.size()) + " points of [1.48, 1.5]");
}

// -------------------------------------------------------------- invariants

struct Probe {
  std::string name;
  std::function<CertifiedReal(const PrecisionContext&)> eval;
};

Check soundness(const Probe& probe, const PrecisionContext& ctx, const NumberFormat& nf) {
  const CertifiedReal a = probe.eval(ctx);
  const CertifiedReal b = probe.eval(ctx.doubled());
  const bool ok = a.overlaps(b) && b.width() <= a.width();
  return make_check("invariants.soundness." + probe.name, ok, nf.rad(b) + " within " + nf.rad(a),
                    "overlap, narrower", "value " + nf.mid(b));
}

std::vector<Probe> soundness_probes(const FixtureSet& fixtures) {
  std::vector<Probe> probes;
  for (const auto& [table, key] : std::vector<std::pair<std::string, std::string>>{
           {"Q", "13"}, {"QRH", "0.8"}, {"Y", "13"}, {"Yprime", "13"}, {"B1", "3"}}) {
    const FixtureRow* row = fixtures.find(table, key);
    require(row != nullptr, ErrorKind::fixture, "fixture lacks " + table + " row " + key);
    probes.push_back({"row_" + table + "_" + key, [row, &fixtures](const PrecisionContext& c) {
                        return evaluate_objective(objective_for_row(*row), params_for_row(*row),
                                                  ladder_for_row(*row, fixtures), c)
                            .value;
                      }});
  }
  probes.push_back({"c3", [](const PrecisionContext& c) { return c3(Rational(13), c); }});
  probes.push_back({"phi1", [](const PrecisionContext& c) {
                      return phi_family(Rational(3, 2), 3, c).phi1;
                    }});
  probes.push_back({"zeta_modulus", [](const PrecisionContext& c) {
                      return abs(em_zeta({0.5, 14.0}, c));
                    }});
  probes.push_back({"stieltjes_7", [](const PrecisionContext& c) { return stieltjes_constant(7, c); }});
  return probes;
}

Check plp3_monotone(const PrecisionContext& ctx, const NumberFormat& nf) {
  // Half-line-shaped parameter sets plus a few arbitrary ones.
  const std::vector<KParams> sets = {
      {Rational(618, 1000), Rational(1, 6), Rational(1), Rational(1), Rational(131, 100), Rational(1, 2)},
      {Rational(618, 1000), Rational(1, 6), Rational(1), Rational(3, 10), Rational(131, 100), Rational(1, 10)},
      {Rational(2), Rational(1, 4), Rational(1, 2), Rational(5), Rational(1), Rational(1)},
      {Rational(1, 2), Rational(1, 3), Rational(2), Rational(50), Rational(3, 2), Rational(1, 5)},
  };
  const std::vector<Rational> heights = {Rational(3), Rational(10), Rational(1000), Rational(1000000),
                                         Rational(1000000000000)};
  int checked = 0, skipped = 0, violations = 0;
  double worst = -1e300;
  for (const auto& kp : sets) {
    for (const auto& t : heights) {
      const auto sigmas = grid(Rational(1, 2), Rational(1 + kp.delta_r), 20, true);
      std::optional<CertifiedReal> prev;
      bool admissible = true;
      for (const auto& s : sigmas) {
        const ConditionedBound b = plp_strip_bound(kp, s, t, Rational(3), ctx);
        const auto* m = b.conditions.find("tcond0");
        if (m == nullptr || m->margin <= 0) {
          admissible = false;
          break;
        }
        if (prev) {
          ++checked;
          worst = std::max(worst, (b.value.lower() - prev->upper()).to_double(MPFR_RNDU));
          if (prev->upper() < b.value.lower()) ++violations;
        }
        prev = b.value;
      }
      if (!admissible) ++skipped;
    }
  }
  const bool ok = checked > 0 && violations == 0;
  return make_check("invariants.plp3_monotone", ok, nf.real(worst), "<= 0 (next - previous)",
                    std::to_string(checked) + " steps checked, " + std::to_string(skipped) +
                        " (k, t) cases skipped for tcond0 margin <= 0");
}

Check trig_inequality(const PrecisionContext& ctx, const NumberFormat& nf, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CertifiedReal lowest(1e300, ctx.bits());
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const double sigma = 1 + 1.5 * (1 - unit(rng));  // (1, 2.5]
    const double t = 0.5 + 199.5 * unit(rng);
    const CertifiedReal z = zeta_real(sigma, ctx);
    const CertifiedReal a = abs(em_zeta({sigma, t}, ctx));
    const CertifiedReal b = abs(em_zeta({sigma, 2 * t}, ctx));
    const CertifiedReal product = pown(z, 3) * pown(a, 4) * b;
    ok = ok && product.upper_double() >= 1;
    if (product.lower() < lowest.lower()) lowest = product;
  }
  return make_check("invariants.trig_inequality", ok, nf.lower(lowest), ">= 1",
                    "zeta(s)^3 |zeta(s+it)|^4 |zeta(s+2it)| on 100 samples");
}

Check lavrik_containment(const PrecisionContext& ctx, const NumberFormat& nf) {
  const auto& table = StieltjesTable::shipped();
  double worst = 0;
  bool ok = true;
  // n!/2^{n+1} is stated for n >= 1 (it is below gamma_0).
  for (int n = 1; n <= table.n_max(); ++n) {
    const CertifiedReal g = abs(table.enclosure(n, ctx.bits()));
    const CertifiedReal bound = lavrik_bound(n, ctx.bits());
    ok = ok && g.upper() <= bound.lower();
    worst = std::max(worst, (g.upper() / bound.lower()).to_double(MPFR_RNDU));
  }
  return make_check("invariants.lavrik", ok, nf.real(worst), "<= 1 (|gamma_n| / bound)",
                    "n = 1.." + std::to_string(table.n_max()));
}

Check derivative_fd(const PrecisionContext& ctx, const NumberFormat& nf) {
  const double h = 1e-10;
  const std::vector<double> sigmas = {0.6, 0.9, 1.3, 2.0, 3.0};
  const std::vector<double> ts = {0.5, 7.0, 21.0, 40.0};
  double worst = 0;
  bool ok = true;
  int points = 0;
  for (double sigma : sigmas) {
    for (double t : ts) {
      ++points;
      const double a = sigma + h, b = sigma - h;  // both exact differences below
      const CertifiedReal ca(a, ctx.bits()), cb(b, ctx.bits());
      const CertifiedReal half_step = (ca - cb).ldexp(-1);
      const CertifiedReal mid = (ca + cb).ldexp(-1);
      const CertifiedComplex fa = em_zeta({a, t}, ctx);
      const CertifiedComplex fb = em_zeta({b, t}, ctx);
      const CertifiedReal two_step = ca - cb;
      const CertifiedComplex quotient{(fa.re - fb.re) / two_step, (fa.im - fb.im) / two_step};
      const CertifiedComplex s{mid, CertifiedReal(t, ctx.bits())};
      const CertifiedComplex d = em_zeta_deriv_enclosure(s, ctx).value;
      // Central-difference truncation h^2/6 |zeta'''|, with |zeta'''| taken
      // from a second difference of zeta' and doubled.
      const double delta = 1e-3;
      const auto dp = em_zeta_deriv({sigma + delta, t}, ctx);
      const auto dm = em_zeta_deriv({sigma - delta, t}, ctx);
      const auto d0 = em_zeta_deriv({sigma, t}, ctx);
      const double third = std::hypot(dp.re.mid_double() - 2 * d0.re.mid_double() + dm.re.mid_double(),
                                      dp.im.mid_double() - 2 * d0.im.mid_double() + dm.im.mid_double()) /
                           (delta * delta);
      const double half_step_d = half_step.mid_double();
      const double allowance = half_step_d * half_step_d / 6 * (2 * third + 1);
      const double gap = std::max((abs(quotient.re - d.re)).lower_double(),
                                  (abs(quotient.im - d.im)).lower_double());
      worst = std::max(worst, gap / allowance);
      ok = ok && gap <= allowance;
    }
  }
  return make_check("invariants.zeta_derivative_fd", ok, nf.real(worst), "<= 1 (gap / allowance)",
                    std::to_string(points) + " points, h=1e-10");
}

std::vector<Check> branch_dominance(const PrecisionContext& ctx, const FixtureSet& fixtures) {
  int rows = 0;
  bool ok = true;
  std::string offender;
  for (const auto& row : fixtures.rows()) {
    if (std::find(table_ids().begin(), table_ids().end(), row.table_id) == table_ids().end()) continue;
    const ConditionedBound b =
        evaluate_objective(objective_for_row(row), params_for_row(row), ladder_for_row(row, fixtures), ctx);
    ++rows;
    for (const auto& br : b.branches) {
      if (b.value.lower() < br.value.lower() || b.value.upper() < br.value.upper()) {
        ok = false;
        offender = row.table_id + "." + row.row_key + ":" + br.id;
      }
    }
  }
  return {make_check("invariants.branch_dominance", ok, std::to_string(rows) + " rows", "value >= every branch",
                     offender)};
}

Check q_h_beta_line(const PrecisionContext& ctx, const FixtureSet& fixtures) {
  const FixtureRow* row = fixtures.find("Q", "13");
  require(row != nullptr, ErrorKind::fixture, "fixture lacks Q row 13");
  HParams p{row->value("d"), row->value("beta"), row->value("epsilon1"),
            row->value("sigma1"), row->value("eta"), row->value("t0")};
  auto feasible = [&](const Rational& beta) {
    HParams q = p;
    q.beta = beta;
    return q_h(q, ctx).bound.valid();
  };
  // Walk down to an infeasible beta, then bisect for the floor.
  Rational hi = p.beta, lo = p.beta;
  while (feasible(lo)) {
    lo -= Rational(1, 20);
    require(sgn(lo) > 0, ErrorKind::domain, "no beta floor above 0");
  }
  for (int i = 0; i < 40; ++i) {
    const Rational mid = (lo + hi) / 2;
    (feasible(mid) ? hi : lo) = mid;
  }
  const Rational floor = hi;
  // The value falls with beta while W grows without bound at the floor.
  std::vector<CertifiedReal> values, widths;
  for (int j = 0; j < 10; ++j) {
    HParams q = p;
    q.beta = p.beta - (p.beta - floor) * Rational(j, 10);
    const HBound hb = q_h(q, ctx);
    values.push_back(hb.bound.value);
    require(hb.W.has_value(), ErrorKind::domain, "W undefined above the beta floor");
    widths.push_back(*hb.W);
  }
  bool ok = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    ok = ok && values[i].upper() < values[i - 1].lower() && widths[i - 1].upper() < widths[i].lower();
  }
  return make_check("invariants.q_h_beta_line", ok,
                    values.front().mid().to_string(6) + " -> " + values.back().mid().to_string(6) +
                        ", W " + widths.front().mid().to_string(6) + " -> " + widths.back().mid().to_string(6),
                    "value decreasing, W increasing",
                    "beta from " + format_rational(p.beta, 7) + " toward floor " + format_rational(floor, 10));
}

Check c3_decreasing(const PrecisionContext& ctx) {
  const std::vector<Rational> heights = {Rational(3), Rational(5), Rational(13), Rational(100),
                                         Rational(1000), Rational(1000000), Rational(1000000000000)};
  bool ok = true;
  std::optional<CertifiedReal> prev;
  std::string trail;
  for (const auto& t0 : heights) {
    const CertifiedReal v = c3(t0, ctx);
    if (prev) ok = ok && v.upper() < prev->lower();
    trail += (trail.empty() ? "" : ", ") + v.mid().to_string(6);
    prev = v;
  }
  return make_check("invariants.c3_decreasing", ok, trail, "strictly decreasing", "t0 = 3 .. 1e12");
}

Check ladder_floor(const PrecisionContext& ctx, const FixtureSet& fixtures) {
  bool ok = true;
  int ladders = 0;
  for (const auto* row : fixtures.table("Y")) {
    const LadderTable ladder = ladder_for_row(*row, fixtures);
    if (ladder.empty()) continue;
    ++ladders;
    Rational q_min = ladder.entries().front().second;
    for (const auto& e : ladder.entries()) q_min = std::min(q_min, e.second);
    const Rational floor = q_min / ladder.entries().front().first;
    // Equality for a single rung, so only a certain violation fails.
    ok = ok && ladder_sum(ladder, ctx).upper() >= enclose_q(floor, ctx).lower();
  }
  return make_check("invariants.ladder_sum_floor", ok && ladders > 0, std::to_string(ladders) + " ladders",
                    ">= Q_min / W_1");
}

}  // namespace

std::vector<Check> run_checks(const std::vector<CheckTask>& tasks) {
  std::vector<Check> out;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < tasks.size(); begin += width) {
    const std::size_t end = std::min(tasks.size(), begin + width);
    std::vector<std::future<std::vector<Check>>> running;
    for (std::size_t i = begin; i < end; ++i) {
      running.push_back(std::async(std::launch::async, [&task = tasks[i]] {
        try {
          return task.run();
        } catch (const std::exception& e) {
          return std::vector<Check>{make_check(task.id, false, "-", "-", std::string("error: ") + e.what())};
        }
      }));
    }
    for (auto& f : running) {
      auto checks = f.get();
      out.insert(out.end(), std::make_move_iterator(checks.begin()), std::make_move_iterator(checks.end()));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

std::vector<CheckTask> table_checks(const PrecisionContext& ctx, const FixtureSet& fixtures,
                                    const SuiteOptions& options) {
  std::vector<CheckTask> tasks;
  for (const auto& id : table_ids()) {
    tasks.push_back({"tables." + id, [id, ctx, &fixtures, options] {
                       return table_rows(id, ctx, fixtures, options);
                     }});
  }
  return tasks;
}

std::vector<CheckTask> small_t_checks(const PrecisionContext& ctx, const SuiteOptions& options) {
  const NumberFormat nf = options.numbers;
  const Rational t500(500);
  const Rational t_big = parse_rational("2exp(e^2)");
  return {
      {"small_t.half_line_sup", [ctx, nf] { return std::vector{half_line_sup(ctx, nf)}; }},
      {"small_t.aleks_log", [=] {
         return std::vector{segment_rescale("small_t.aleks_log", Rational(1), t500, t_big, "1.288", ctx, nf)};
       }},
      {"small_t.aleks_power", [=] {
         return std::vector{
             segment_rescale("small_t.aleks_power", Rational(11, 12), t500, t_big, "1.5", ctx, nf)};
       }},
      {"small_t.reciprocal_grid", [ctx, nf] { return std::vector{reciprocal_grid(ctx, nf)}; }},
      {"small_t.reciprocal_power", [ctx, nf] { return std::vector{reciprocal_power(ctx, nf)}; }},
  };
}

std::vector<CheckTask> phi_checks(const PrecisionContext& ctx, const SuiteOptions& options) {
  const NumberFormat nf = options.numbers;
  std::vector<CheckTask> tasks;
  for (const auto& [sigma_k, k] : std::vector<std::pair<Rational, int>>{
           {Rational(145, 100), 1}, {Rational(2), 3}, {Rational(251, 100), 10}}) {
    tasks.push_back({"phi.phi0_nonnegative.k" + std::to_string(k),
                     [=] { return std::vector{phi0_grid(sigma_k, k, ctx, nf)}; }});
  }
  tasks.push_back({"phi.phi1_below_one", [=] { return std::vector{phi1_below_one(ctx, nf)}; }});
  tasks.push_back({"phi.phi2_floor", [=] { return std::vector{phi2_floor(ctx, nf)}; }});
  return tasks;
}

std::vector<CheckTask> invariant_checks(const PrecisionContext& ctx, const FixtureSet& fixtures,
                                        const SuiteOptions& options) {
  const NumberFormat nf = options.numbers;
  const std::uint64_t seed = options.seed;
  std::vector<CheckTask> tasks;
  for (auto& probe : soundness_probes(fixtures)) {
    tasks.push_back({"invariants.soundness." + probe.name,
                     [probe, ctx, nf] { return std::vector{soundness(probe, ctx, nf)}; }});
  }
  tasks.push_back({"invariants.plp3_monotone", [=] { return std::vector{plp3_monotone(ctx, nf)}; }});
  tasks.push_back({"invariants.trig_inequality", [=] { return std::vector{trig_inequality(ctx, nf, seed)}; }});
  tasks.push_back({"invariants.lavrik", [=] { return std::vector{lavrik_containment(ctx, nf)}; }});
  tasks.push_back({"invariants.zeta_derivative_fd", [=] { return std::vector{derivative_fd(ctx, nf)}; }});
  tasks.push_back({"invariants.branch_dominance", [ctx, &fixtures] { return branch_dominance(ctx, fixtures); }});
  tasks.push_back({"invariants.q_h_beta_line",
                   [ctx, &fixtures] { return std::vector{q_h_beta_line(ctx, fixtures)}; }});
  tasks.push_back({"invariants.c3_decreasing", [ctx] { return std::vector{c3_decreasing(ctx)}; }});
  tasks.push_back({"invariants.ladder_sum_floor",
                   [ctx, &fixtures] { return std::vector{ladder_floor(ctx, fixtures)}; }});
  return tasks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables", "small-t", "phi", "invariants"};
  return names;
}

std::vector<CheckTask> suite_checks(const std::string& suite, const PrecisionContext& ctx,
                                    const FixtureSet& fixtures, const SuiteOptions& options) {
  if (suite == "tables") return table_checks(ctx, fixtures, options);
  if (suite == "small-t") return small_t_checks(ctx, options);
  if (suite == "phi") return phi_checks(ctx, options);
  if (suite == "invariants") return invariant_checks(ctx, fixtures, options);
  raise(ErrorKind::usage, "unknown suite '" + suite + "'");
}

Table check_table(const std::vector<Check>& checks) {
  Table table{{"check", "status", "achieved", "required", "detail"}, {}};
  for (const auto& c : checks) {
    table.add({text_cell(c.id), text_cell(c.passed ? "pass" : "FAIL"), text_cell(c.achieved),
               text_cell(c.required), text_cell(c.detail)});
  }
  return table;
}

}  // namespace ezeta::cli
