#include <algorithm>
#include <cmath>

#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"
#include "ezeta/optimizer.hpp"
#include "objective_fast.hpp"

namespace ezeta {

namespace {

struct ObjectiveInfo {
  std::string id;
  std::vector<std::string> params;
  bool ladder;
};

const std::vector<ObjectiveInfo>& registry() {
  static const std::vector<ObjectiveInfo> list = {
      {"q_rh", {"sigma0", "epsilon", "sigma1", "eta", "t0", "T"}, false},
      {"q_h", {"d", "beta", "W", "epsilon1", "sigma1", "eta", "t0"}, false},
      {"q_one", {"d", "epsilon1", "sigma1", "eta", "t0"}, false},
      {"y0", {"d1", "sigma1", "eta", "t0"}, true},
      {"yprime0", {"d1", "t0"}, true},
      {"c0_strip", {"W", "sigma1", "t0", "eta"}, false},
  };
  return list;
}

enum Objective { kQrh, kQh, kQone, kY0, kYprime0, kC0 };

const Rational& need(const ParamVector& p, std::string_view objective, const char* key) {
  const auto it = p.find(key);
  require(it != p.end(), ErrorKind::usage,
          std::string(objective) + " needs parameter '" + key + "'");
  return it->second;
}

ConditionedBound c0_bound(const ParamVector& p, const PrecisionContext& ctx) {
  const Rational& W = need(p, "c0_strip", "W");
  const Rational& sigma1 = need(p, "c0_strip", "sigma1");
  const Rational& t0 = need(p, "c0_strip", "t0");
  const Rational& eta = need(p, "c0_strip", "eta");
  const StripBound strip = c0_strip(W, sigma1, t0, eta, ctx);
  ConditionedBound out;
  out.value = strip.constant;
  out.branches = {{"constant", strip.constant}};
  out.certified = ctx.rounding_policy() == RoundingPolicy::outward;
  out.region = Region::zero_free(enclose(W, 128).upper_double(), enclose(t0, 128).upper_double());
  out.region.sigma_max = enclose(sigma1, 128).lower_double();
  out.conditions.add("eta_ge_2_over_t0", enclose(Rational(eta - 2 / t0), ctx.bits()));
  out.conditions.add("eta_le_1_minus_1_over_t0", enclose(Rational(1 - 1 / t0 - eta), ctx.bits()));
  return out;
}

}  // namespace

const std::vector<std::string>& objective_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& o : registry()) out.push_back(o.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& objective_parameters(std::string_view objective_id) {
  return registry()[detail::objective_index(objective_id)].params;
}

bool objective_uses_ladder(std::string_view objective_id) {
  return registry()[detail::objective_index(objective_id)].ladder;
}

ConditionedBound evaluate_objective(std::string_view id, const ParamVector& p,
                                    const LadderTable& ladder, const PrecisionContext& ctx) {
  for (const auto& [key, value] : p) {
    const auto& names = objective_parameters(id);
    require(std::find(names.begin(), names.end(), key) != names.end(), ErrorKind::usage,
            std::string(id) + " has no parameter '" + key + "'");
  }
  switch (detail::objective_index(id)) {
    case kQrh:
      return q_rh(RhParams::from_sigma0(need(p, id, "sigma0"), need(p, id, "epsilon"),
                                        need(p, id, "sigma1"), need(p, id, "eta"),
                                        need(p, id, "t0"), need(p, id, "T")),
                  ctx);
    case kQh: {
      const bool has_beta = p.count("beta") > 0;
      require(has_beta != (p.count("W") > 0), ErrorKind::usage,
              "q_h takes exactly one of beta and W");
      const Rational& d = need(p, id, "d");
      const Rational& eps1 = need(p, id, "epsilon1");
      const Rational& t0 = need(p, id, "t0");
      const Rational beta = has_beta ? p.at("beta") : beta_for_W(p.at("W"), d, eps1, t0);
      return q_h({d, beta, eps1, need(p, id, "sigma1"), need(p, id, "eta"), t0}, ctx).bound;
    }
    case kQone:
      return q_one(need(p, id, "d"), need(p, id, "epsilon1"), need(p, id, "sigma1"),
                   need(p, id, "eta"), need(p, id, "t0"), ctx);
    case kY0:
      return y0({need(p, id, "d1"), need(p, id, "sigma1"), need(p, id, "eta"), need(p, id, "t0"),
                 ladder, false},
                ctx);
    case kYprime0:
      return yprime0({need(p, id, "d1"), Rational(2), Rational(1), need(p, id, "t0"), ladder, true},
                     ctx);
    default:
      return c0_bound(p, ctx);
  }
}

namespace detail {

int objective_index(std::string_view objective_id) {
  const auto& list = registry();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].id == objective_id) return static_cast<int>(i);
  }
  raise(ErrorKind::usage, "unknown objective '" + std::string(objective_id) + "'");
}

Eval<double> fast_objective(int index, const double* x, double ladder_sum) {
  const Field<double> f;
  switch (index) {
    case kQrh:
      return q_rh(f, x[1], 2 * (1 + x[1] - x[0]), x[2], x[3], x[4], x[5]);
    case kQh: {
      const double d = x[0], eps1 = x[3], t0 = x[6];
      const double beta = std::isnan(x[1]) ? (1 / x[2] + d) / (d * (1 + 1 / a_eps(f, eps1, t0))) : x[1];
      return q_h_common(f, d, beta, eps1, x[4], x[5], t0, 1 / approx::W0 - d, t0 - approx::H,
                        false);
    }
    case kQone: {
      const double d = x[0], eps1 = x[1], t0 = x[4];
      return q_h_common(f, d, pinned_beta(f, eps1, t0), eps1, x[2], x[3], t0, 1 / approx::W0 - d,
                        t0 - approx::H, true);
    }
    case kY0:
      return y0(f, x[0], x[1], x[2], x[3], ladder_sum);
    case kYprime0:
      return yprime0(f, x[0], x[1], ladder_sum);
    default: {
      const double W = x[0], sigma1 = x[1], t0 = x[2], eta = x[3];
      Eval<double> out;
      out.branches.emplace_back("constant", c0_constant(f, W, sigma1, t0, eta));
      out.margins.emplace_back("eta_ge_2_over_t0", eta - 2 / t0);
      out.margins.emplace_back("eta_le_1_minus_1_over_t0", 1 - 1 / t0 - eta);
      return out;
    }
  }
}

}  // namespace detail

}  // namespace ezeta
