#include "ezeta/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bound_kernels.hpp"
#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"
#include "ezeta/numerics.hpp"

namespace ezeta {

namespace {

using detail::Eval;
using detail::Val;

CertifiedReal certify(const CertifiedReal& x) { return x; }
CertifiedReal certify(const Real& x) { return CertifiedReal(x, x); }

/// Runs `fn` with the field matching the rounding policy.
template <class Fn>
auto dispatch(const PrecisionContext& ctx, Fn&& fn) {
  if (ctx.rounding_policy() == RoundingPolicy::outward) return fn(Field<CertifiedReal>(ctx));
  return fn(Field<Real>(ctx));
}

constexpr mpfr_prec_t kEdgeBits = 128;

double round_up(const Rational& q) { return enclose(q, kEdgeBits).upper_double(); }
double round_down(const Rational& q) { return enclose(q, kEdgeBits).lower_double(); }

/// True unless x >= e is certain.
bool maybe_below_e(const Rational& x) {
  const CertifiedReal e = exp(CertifiedReal(1.0, kEdgeBits));
  return enclose(x, kEdgeBits).lower() < e.upper();
}

template <class T>
ConditionedBound assemble(const Eval<T>& ev, Region region, bool certified) {
  ConditionedBound out;
  out.region = region;
  out.certified = certified;
  for (const auto& [id, margin] : ev.margins) out.conditions.add(std::string(id), certify(margin));
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ev.branches.size(); ++i) {
    const CertifiedReal value = certify(ev.branches[i].second);
    if (value.mid_double() > best) {
      best = value.mid_double();
      out.selected = i;
    }
    out.branches.push_back({std::string(ev.branches[i].first), value});
  }
  out.value = certify(detail::max_of(ev.branches));
  return out;
}

template <class F>
std::vector<std::pair<Val<F>, Val<F>>> ladder_values(const F& f, const LadderTable& ladder) {
  std::vector<std::pair<Val<F>, Val<F>>> out;
  out.reserve(ladder.size());
  for (const auto& [W, Q] : ladder.entries()) out.emplace_back(f.num(W), f.num(Q));
  return out;
}

Rational d_slack(const Rational& d) { return Rational(parse_rational("1/W0") - d); }
Rational t0_slack(const Rational& t0) { return Rational(t0 - parse_rational("H")); }

void require_positive(const Rational& x, const char* what) {
  require(sgn(x) > 0, ErrorKind::domain, std::string(what) + " must be positive");
}

}  // namespace

// ------------------------------------------------------------------ reports

void ConditionReport::add(std::string id, const CertifiedReal& margin) {
  const double lower = margin.lower_double();
  entries_.push_back({std::move(id), margin.lower().sign() >= 0 && !std::isnan(lower), lower});
}

void ConditionReport::add(std::string id, bool satisfied, double margin) {
  entries_.push_back({std::move(id), satisfied, margin});
}

void ConditionReport::merge(const ConditionReport& other, std::string_view prefix) {
  for (const auto& e : other.entries_) {
    entries_.push_back({std::string(prefix) + e.id, e.satisfied, e.margin});
  }
}

bool ConditionReport::all_satisfied() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.satisfied; });
}

const ConditionEntry* ConditionReport::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string ConditionReport::failures() const {
  std::string out;
  for (const auto& e : entries_) {
    if (e.satisfied) continue;
    if (!out.empty()) out += ",";
    out += e.id;
  }
  return out;
}

Region Region::half_plane(double sigma_min, double t_lo, double t_hi) {
  Region r;
  r.kind = Kind::half_plane;
  r.sigma_min = sigma_min;
  r.t_lo = t_lo;
  r.t_hi = t_hi;
  return r;
}

Region Region::zero_free(double W, double t_lo, double t_hi) {
  Region r;
  r.kind = Kind::zero_free;
  r.W = W;
  r.sigma_min = -std::numeric_limits<double>::infinity();
  r.t_lo = t_lo;
  r.t_hi = t_hi;
  return r;
}

double Region::sigma_floor(double t) const {
  if (kind == Kind::half_plane) return sigma_min;
  return 1.0 - 1.0 / (W * std::log(t));
}

std::string Region::describe() const {
  std::ostringstream out;
  out.precision(10);
  if (kind == Kind::half_plane) {
    out << "sigma >= " << sigma_min;
  } else {
    out << "sigma >= 1 - 1/(" << W << " log t)";
  }
  if (std::isfinite(sigma_max)) out << ", sigma <= " << sigma_max;
  out << ", " << t_lo << " <= t";
  if (std::isfinite(t_hi)) out << " <= " << t_hi;
  return out.str();
}

LadderTable::LadderTable(std::vector<std::pair<Rational, Rational>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    require(sgn(entries_[i].second) > 0, ErrorKind::ladder_order, "ladder Q values must be positive");
    require(sgn(entries_[i].first) > 0, ErrorKind::ladder_order, "ladder W values must be positive");
    if (i > 0) {
      require(entries_[i - 1].first < entries_[i].first, ErrorKind::ladder_order,
              "ladder W values must be strictly increasing");
    }
  }
}

LadderTable LadderTable::from(const Rational& W_min) const {
  std::vector<std::pair<Rational, Rational>> kept;
  for (const auto& e : entries_) {
    if (e.first >= W_min) kept.push_back(e);
  }
  return LadderTable(std::move(kept));
}

RhParams RhParams::from_sigma0(const Rational& sigma0, const Rational& epsilon,
                               const Rational& sigma1, const Rational& eta, const Rational& t0,
                               const Rational& T) {
  return {epsilon, Rational(2 * (1 + epsilon - sigma0)), sigma1, eta, t0, T};
}

// ------------------------------------------------------------- operations

ATerms a_terms(const Rational& sigma, const Rational& Q0, const Rational& t,
               const PrecisionContext& ctx) {
  require(t > 1, ErrorKind::domain, "a-terms need t > 1");
  return dispatch(ctx, [&](const auto& f) {
    return ATerms{certify(detail::a0(f, f.num(sigma), f.num(Q0), f.num(t))),
                  certify(detail::a1(f, f.num(sigma), f.num(Q0), f.num(t)))};
  });
}

ConditionedBound plp_strip_bound(const KParams& kp, const Rational& sigma, const Rational& t,
                                 const Rational& t0, const PrecisionContext& ctx) {
  require(sgn(kp.k1) >= 0 && sgn(kp.k2) >= 0 && sgn(kp.k3) >= 0 && sgn(kp.k4) >= 0,
          ErrorKind::domain, "k parameters must be nonnegative");
  require(sgn(kp.delta_r) > 0, ErrorKind::domain, "delta_r must be positive");
  const Rational half(1, 2);
  const Rational right = 1 + kp.delta_r;
  require(sigma >= half && sigma <= right, ErrorKind::domain, "sigma outside the strip [1/2, 1 + delta_r]");
  require(!maybe_below_e(t0), ErrorKind::domain, "strip bound needs t0 >= e");
  require(t >= t0, ErrorKind::domain, "strip bound needs t >= t0");

  const Rational width = half + kp.delta_r;
  const Rational left_exponent = (sigma - half) / width;
  const Rational right_exponent = (right - sigma) / width;

  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T one = f.num(1.0);
    const T tt = f.num(t);
    const T a0 = detail::a0(f, f.num(right), f.num(kp.Q0), f.num(t0));
    const T a1 = detail::a1(f, f.num(right), f.num(kp.Q0), f.num(t0));
    // b^e with 0^0 = 1 and 0^e = 0 for e > 0.
    auto power = [&](const Rational& base_q, const T& base, const Rational& e) -> T {
      if (sgn(e) == 0) return one;
      if (sgn(base_q) == 0) return f.num(0.0);
      return pow(base, f.num(e));
    };
    const T half_line = f.num(kp.k1) * pow(one + a1, f.num(kp.k2)) * pow(tt, f.num(kp.k2));
    const Rational half_line_sign = kp.k1;
    const T value = power(kp.k4, f.num(kp.k4), left_exponent) *
                    pow(one + a0, f.num(kp.k3)) * pow(log(tt), f.num(kp.k3)) * (one + a1) *
                    power(half_line_sign, half_line, right_exponent);
    Eval<T> ev;
    ev.branches.emplace_back("strip", value);
    // Decreasing in sigma iff k4 <= k1 (1 + a1)^{k2} t^{k2}.
    const T k1_scaled = f.num(kp.k1) * pow(one + a1, f.num(kp.k2));
    if (sgn(kp.k2) > 0 && sgn(kp.k1) > 0) {
      const T threshold = sgn(kp.k4) == 0
                              ? f.num(0.0)
                              : pow(f.num(kp.k4) / k1_scaled, one / f.num(kp.k2));
      ev.margins.emplace_back("tcond0", tt - threshold);
    } else {
      ev.margins.emplace_back("tcond0", half_line - f.num(kp.k4));
    }
    Region region = Region::half_plane(0.5, round_up(t0));
    region.sigma_max = round_down(right);
    return assemble(ev, region, std::decay_t<decltype(f)>::certified);
  });
}

ConditionedBound plp_cor_bound(const Rational& delta_r, const Rational& t0, const Rational& t,
                               const PrecisionContext& ctx) {
  require(sgn(delta_r) > 0, ErrorKind::domain, "delta_r must be positive");
  require(!maybe_below_e(t0), ErrorKind::domain, "needs t0 >= e");
  require(t >= t0, ErrorKind::domain, "needs t >= t0");
  const Rational right = 1 + delta_r;
  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T sigma_right = f.num(right);
    const T tt = f.num(t);
    Eval<T> ev;
    ev.branches.emplace_back("coefficient", detail::convexity_factor(f, sigma_right, f.num(t0)));
    ev.margins.emplace_back("tcond", detail::sixth_root_log(f, tt) -
                                         detail::half_line_threshold(f, sigma_right, f.num(t0)));
    ev.margins.emplace_back("tcond_monotone", log(tt) / f.num(6.0) + f.num(1.0));
    Region region = Region::half_plane(0.5, round_up(t0));
    region.sigma_max = round_down(right);
    return assemble(ev, region, std::decay_t<decltype(f)>::certified);
  });
}

CertifiedReal c3(const Rational& t0, const PrecisionContext& ctx) {
  require(t0 >= 3, ErrorKind::domain, "c3 needs t0 >= 3");
  return dispatch(ctx, [&](const auto& f) { return certify(detail::c3(f, f.num(t0))); });
}

CertifiedReal c_backlund(const Rational& sigma1, const Rational& t0, const Rational& k,
                         const Rational& eta, const PrecisionContext& ctx) {
  require(k >= 1, ErrorKind::domain, "k must be at least 1");
  require(t0 >= 3, ErrorKind::domain, "needs t0 >= 3");
  require(sgn(eta) > 0 && eta / k < t0, ErrorKind::domain, "needs 0 < eta/k < t0");
  return dispatch(ctx, [&](const auto& f) {
    return certify(detail::c_backlund(f, f.num(sigma1), f.num(t0), f.num(k), f.num(eta)));
  });
}

StripBound c0_strip(const Rational& W, const Rational& sigma1, const Rational& t0,
                    const Rational& eta, const PrecisionContext& ctx) {
  require_positive(W, "W");
  require(t0 >= 3, ErrorKind::domain, "needs t0 >= 3");
  require(eta >= Rational(2) / t0 && eta <= 1 - 1 / t0, ErrorKind::domain,
          "eta must lie in [2/t0, 1 - 1/t0]");
  return dispatch(ctx, [&](const auto& f) {
    return StripBound{certify(exp(f.num(1.0) / f.num(W))),
                      certify(detail::c0_constant(f, f.num(W), f.num(sigma1), f.num(t0), f.num(eta)))};
  });
}

CertifiedReal v_factor(const Rational& kappa, const Rational& sigma1, const Rational& t0,
                       const Rational& eta, const PrecisionContext& ctx) {
  require_positive(kappa, "kappa");
  require(sigma1 >= 1 + kappa && sigma1 <= 2, ErrorKind::domain, "needs 1 + kappa <= sigma1 <= 2");
  require(t0 >= 3, ErrorKind::domain, "needs t0 >= 3");
  require(sgn(eta) > 0 && eta < 2 * t0, ErrorKind::domain, "needs 0 < eta < 2 t0");
  return dispatch(ctx, [&](const auto& f) {
    return certify(detail::v_factor(f, f.num(kappa), f.num(sigma1), f.num(t0), f.num(eta)));
  });
}

PhiValues phi_family(const Rational& sigma, int k, const PrecisionContext& ctx) {
  require(sigma > 1 && sigma < 3, ErrorKind::domain, "phi needs 1 < sigma < 3");
  require(k >= 1, ErrorKind::domain, "phi needs k >= 1");
  const mpfr_prec_t bits = ctx.bits();
  const CertifiedReal s = enclose(sigma, bits);
  const CertifiedReal one(1.0, bits);
  const CertifiedReal x = s - one;
  CertifiedReal sum(0.0, bits);
  CertifiedReal power = one;
  CertifiedReal factorial = one;
  for (int n = 1; n <= k; ++n) {
    power = power * x;
    factorial = factorial * CertifiedReal(static_cast<double>(n), bits);
    const CertifiedReal term = power * stieltjes_constant(n, ctx) / factorial;
    sum = (n % 2 == 0) ? sum + term : sum - term;
  }
  const CertifiedReal s3 = s - CertifiedReal(3.0, bits);
  const CertifiedReal phi0 = sum + pown(x.ldexp(-1), static_cast<unsigned>(k + 1)) / s3;
  const CertifiedReal phi1 =
      (sqr(s3) + sqr(x)) / (sqr(s3) * (one + x * (phi0 + CertifiedReal::euler_gamma(bits))));
  return {phi0, phi1};
}

CertifiedReal phi2(const Rational& sigma0, const PrecisionContext& ctx) {
  require(sigma0 > 1 && sigma0 <= Rational(3, 2), ErrorKind::domain, "phi2 needs 1 < sigma0 <= 3/2");
  return max(phi_family(sigma0, 10, ctx).phi1,
             CertifiedReal::parse(literal::logderiv_real_floor, ctx.bits()));
}

ConditionedBound q_rh(const RhParams& p, const PrecisionContext& ctx) {
  require_positive(p.epsilon, "epsilon");
  require_positive(p.eta, "eta");
  require(p.alpha0 != 1, ErrorKind::domain, "alpha0 = 1 is degenerate");
  require(p.epsilon + p.alpha0 / 2 > 0, ErrorKind::domain, "epsilon + alpha0/2 must be positive");
  require(p.t0 > 1, ErrorKind::domain, "needs t0 > 1");
  return dispatch(ctx, [&](const auto& f) {
    const auto ev = detail::q_rh(f, f.num(p.epsilon), f.num(p.alpha0), f.num(p.sigma1),
                                 f.num(p.eta), f.num(p.t0), f.num(p.T));
    const Rational sigma0 = 1 + p.epsilon - p.alpha0 / 2;
    const Region region =
        Region::half_plane(round_up(sigma0), round_up(p.t0), round_down(p.T - Rational(1, 2)));
    return assemble(ev, region, std::decay_t<decltype(f)>::certified);
  });
}

HBound q_h(const HParams& p, const PrecisionContext& ctx) {
  require_positive(p.d, "d");
  require_positive(p.eta, "eta");
  require_positive(p.epsilon1, "epsilon1");
  require(p.beta < 1, ErrorKind::domain, "beta must be below 1");
  require(p.t0 > 16, ErrorKind::domain, "needs t0 > e^e");
  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T d = f.num(p.d);
    const T beta = f.num(p.beta);
    const T eps1 = f.num(p.epsilon1);
    const T t0 = f.num(p.t0);
    const auto ev = detail::q_h_common(f, d, beta, eps1, f.num(p.sigma1), f.num(p.eta), t0,
                                       f.num(d_slack(p.d)), f.num(t0_slack(p.t0)), false);
    const CertifiedReal den = certify(detail::q_h_denominator(f, d, beta, eps1, t0));
    HBound out;
    Region region = Region::half_plane(1.0, round_up(p.t0));
    if (den.certainly_positive()) {
      out.W = CertifiedReal(1.0, den.precision()) / den;
      region = Region::zero_free(out.W->upper_double(), round_up(p.t0));
    }
    out.bound = assemble(ev, region, std::decay_t<decltype(f)>::certified);
    return out;
  });
}

ConditionedBound q_one(const Rational& d, const Rational& epsilon1, const Rational& sigma1,
                       const Rational& eta, const Rational& t0, const PrecisionContext& ctx) {
  require_positive(d, "d");
  require_positive(eta, "eta");
  require_positive(epsilon1, "epsilon1");
  require(t0 > 16, ErrorKind::domain, "needs t0 > e^e");
  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T eps1 = f.num(epsilon1);
    const T tt0 = f.num(t0);
    const T beta = detail::pinned_beta(f, eps1, tt0);
    auto ev = detail::q_h_common(f, f.num(d), beta, eps1, f.num(sigma1), f.num(eta), tt0,
                                 f.num(d_slack(d)), f.num(t0_slack(t0)), true);
    // The floor choice meets its own lower limit with equality.
    ev.margins.emplace_back("beta_conds", f.num(0.0));
    return assemble(ev, Region::half_plane(1.0, round_up(t0)), std::decay_t<decltype(f)>::certified);
  });
}

namespace {

void check_reciprocal(const ReciprocalParams& p) {
  require_positive(p.d1, "d1");
  require_positive(p.eta, "eta");
  require(p.t0 >= 13, ErrorKind::domain, "reciprocal bounds need t0 >= 13");
}

Region reciprocal_region(const ReciprocalParams& p) {
  if (p.ladder.empty()) return Region::half_plane(1.0, round_up(p.t0));
  return Region::zero_free(round_up(p.ladder.entries().front().first), round_up(p.t0));
}

}  // namespace

ConditionedBound y0(const ReciprocalParams& p, const PrecisionContext& ctx) {
  check_reciprocal(p);
  require(!p.asymptotic, ErrorKind::domain, "y0 takes the non-asymptotic parameter set");
  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T sum = detail::ladder_sum(f, ladder_values(f, p.ladder));
    const auto ev = detail::y0(f, f.num(p.d1), f.num(p.sigma1), f.num(p.eta), f.num(p.t0), sum);
    auto out = assemble(ev, reciprocal_region(p), std::decay_t<decltype(f)>::certified);
    for (const char* id : {"sigma1_lower", "sigma1_upper", "eta_lt_2t0"}) {
      const auto* entry = out.conditions.find(id);
      require(entry && entry->satisfied, ErrorKind::domain,
              std::string("sigma1/eta range violated: ") + id);
    }
    return out;
  });
}

ConditionedBound yprime0(const ReciprocalParams& p, const PrecisionContext& ctx) {
  check_reciprocal(p);
  require(p.asymptotic, ErrorKind::domain, "yprime0 takes the asymptotic parameter set");
  return dispatch(ctx, [&](const auto& f) {
    using T = Val<std::decay_t<decltype(f)>>;
    const T sum = detail::ladder_sum(f, ladder_values(f, p.ladder));
    const auto ev = detail::yprime0(f, f.num(p.d1), f.num(p.t0), sum);
    return assemble(ev, reciprocal_region(p), std::decay_t<decltype(f)>::certified);
  });
}

CertifiedReal ladder_sum(const LadderTable& ladder, const PrecisionContext& ctx) {
  return dispatch(ctx, [&](const auto& f) {
    return certify(detail::ladder_sum(f, ladder_values(f, ladder)));
  });
}

CertifiedReal rescale_loglog(const Rational& Q, const Rational& t_lo, const Rational& t_hi,
                             const PrecisionContext& ctx) {
  require(t_lo < t_hi, ErrorKind::domain, "rescale needs t_lo < t_hi");
  const CertifiedReal e_e = exp(exp(CertifiedReal(1.0, kEdgeBits)));
  require(!enclose(t_lo, kEdgeBits).certainly_less(e_e), ErrorKind::domain,
          "log t / log log t is increasing only from t = e^e");
  return dispatch(ctx, [&](const auto& f) {
    const auto L = log(f.num(t_hi));
    return certify(f.num(Q) * L / log(L));
  });
}

CertifiedReal rescale_log_power(const Rational& Q, const Rational& p, const Rational& t_lo,
                                const Rational& t_hi, const PrecisionContext& ctx) {
  require(t_lo > 1 && t_lo <= t_hi, ErrorKind::domain, "needs 1 < t_lo <= t_hi");
  return dispatch(ctx, [&](const auto& f) {
    if (sgn(p) == 0) return certify(f.num(Q));
    const auto L = log(f.num(sgn(p) > 0 ? t_lo : t_hi));
    return certify(f.num(Q) / pow(L, f.num(p)));
  });
}

ConditionedBound combine_regimes(const ConditionedBound& low, const ConditionedBound& high,
                                 const Rational& t_split, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  const CertifiedReal split = enclose(t_split, bits);
  const CertifiedReal one(1.0, bits);

  // Floors are affine in u = 1/log t, so comparing at both ends of the low
  // range covers it.
  auto floor_at = [&](const Region& r, const CertifiedReal& u) {
    if (r.kind == Region::Kind::half_plane) return CertifiedReal(r.sigma_min, bits);
    return one - u / CertifiedReal(r.W, bits);
  };
  const CertifiedReal u_lo = one / log(CertifiedReal(low.region.t_lo, bits));
  const CertifiedReal u_split = one / log(split);
  auto compatibility = [&](const Region& candidate) {
    return min(floor_at(candidate, u_lo) - floor_at(low.region, u_lo),
               floor_at(candidate, u_split) - floor_at(low.region, u_split));
  };

  Region combined = high.region;
  CertifiedReal margin = compatibility(combined);
  if (margin.lower().sign() < 0 && low.region.kind == Region::Kind::half_plane &&
      high.region.kind == Region::Kind::half_plane) {
    combined.sigma_min = std::max(low.region.sigma_min, high.region.sigma_min);
    margin = compatibility(combined);
  }
  require(margin.lower().sign() >= 0, ErrorKind::domain,
          "incompatible regions: " + low.region.describe() + " vs " + high.region.describe());
  combined.t_lo = std::min(low.region.t_lo, high.region.t_lo);
  combined.t_hi = high.region.t_hi;
  combined.sigma_max = std::min(low.region.sigma_max, high.region.sigma_max);

  ConditionedBound out;
  out.region = combined;
  out.certified = low.certified && high.certified;
  out.value = max(low.value, high.value);
  out.branches = {{"low", low.value}, {"high", high.value}};
  out.selected = high.value.mid_double() >= low.value.mid_double() ? 1 : 0;
  out.conditions.merge(low.conditions, "low.");
  out.conditions.merge(high.conditions, "high.");
  out.conditions.add("region_compatibility", margin);
  out.conditions.add("low_covers_split", CertifiedReal(low.region.t_hi, bits) - split);
  out.conditions.add("high_starts_by_split", split - CertifiedReal(high.region.t_lo, bits));
  return out;
}

TrivialBounds trivial_bounds(const Rational& sigma, const PrecisionContext& ctx) {
  require(sigma > 1, ErrorKind::domain, "trivial bounds need sigma > 1");
  return dispatch(ctx, [&](const auto& f) {
    const auto s = f.num(sigma);
    const auto x = s - f.num(1.0);
    return TrivialBounds{certify(min(exp(f.euler_gamma() * x) / x, s / x)),
                         certify(f.num(1.0) / x), certify(s / x)};
  });
}

CertifiedReal aleks_bound(const Rational& sigma, const Rational& t, const PrecisionContext& ctx) {
  require(sigma > Rational(1, 2) && sigma <= Rational(3, 2), ErrorKind::domain,
          "needs 1/2 < sigma <= 3/2");
  const CertifiedReal limit =
      exp(sqr(exp(CertifiedReal(1.0, kEdgeBits)))) * CertifiedReal(2.0, kEdgeBits);
  require(sgn(t) >= 0 && !limit.certainly_less(enclose(t, kEdgeBits)), ErrorKind::domain,
          "needs 0 <= t <= 2 exp(e^2)");
  return dispatch(ctx, [&](const auto& f) {
    return certify(f.num(4.0) / (f.num(sigma) - f.lit("1/2")));
  });
}

Rational beta_for_W(const Rational& W, const Rational& d, const Rational& epsilon1,
                    const Rational& t0) {
  require_positive(W, "W");
  require_positive(d, "d");
  require(t0 > 1, ErrorKind::domain, "needs t0 > 1");
  const Field<Real> f(PrecisionContext(36, RoundingPolicy::nearest));
  const Real a = detail::a_eps(f, f.num(epsilon1), f.num(t0));
  const Real one = f.num(1.0);
  const Real beta = (one / f.num(W) + f.num(d)) / (f.num(d) * (one + one / a));
  Rational out;
  mpfr_get_q(out.get_mpq_t(), beta.get());
  return out;
}

}  // namespace ezeta
