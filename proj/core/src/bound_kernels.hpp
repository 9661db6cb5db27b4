#pragma once

// Bound formulas written once over a scalar field; instantiated with double
// (optimizer search), Real (nearest) and CertifiedReal (outward).

#include <string_view>
#include <utility>
#include <vector>

#include "ezeta/constants.hpp"
#include "ezeta/numerics.hpp"
#include "ezeta/scalar.hpp"

namespace ezeta::detail {

template <class F>
using Val = typename F::value_type;

/// Branch values of a max{...} and margins of its side-conditions.
template <class T>
struct Eval {
  std::vector<std::pair<std::string_view, T>> branches;
  std::vector<std::pair<std::string_view, T>> margins;
};

template <class T>
T max_of(const std::vector<std::pair<std::string_view, T>>& items) {
  T out = items.front().second;
  for (std::size_t i = 1; i < items.size(); ++i) out = max(out, items[i].second);
  return out;
}

inline double zeta_at(const Field<double>&, double s) { return zeta_real_approx(s); }
inline Real zeta_at(const Field<Real>& f, const Real& s) {
  return zeta_real(CertifiedReal(s, s), PrecisionContext(f.digits, RoundingPolicy::nearest)).mid();
}
inline CertifiedReal zeta_at(const Field<CertifiedReal>& f, const CertifiedReal& s) {
  return zeta_real(s, PrecisionContext(f.digits));
}

template <class F>
Val<F> a0(const F& f, const Val<F>& sigma, const Val<F>& Q0, const Val<F>& t) {
  const Val<F> L = log(t);
  const Val<F> sq = sigma + Q0;
  return sq / (f.num(2.0) * t * t * L) + f.pi() / (f.num(2.0) * L) +
         f.pi() * sq * sq / (f.num(4.0) * t * L * L);
}

template <class F>
Val<F> a1(const F&, const Val<F>& sigma, const Val<F>& Q0, const Val<F>& t) {
  return (sigma + Q0) / t;
}

template <class F>
Val<F> c_backlund(const F& f, const Val<F>& sigma1, const Val<F>& t0, const Val<F>& k,
                  const Val<F>& eta) {
  const Val<F> one = f.num(1.0);
  const Val<F> kt = k * t0;
  const Val<F> kt2 = kt * kt;
  const Val<F> c1 = sqrt(sigma1 * sigma1 / kt2 + one);
  const Val<F> c2 = c1 * sqrt((sigma1 + one) * (sigma1 + one) / kt2 + one);
  const Val<F> eta2 = eta * eta;
  return log(one / eta + one / kt) + f.euler_gamma() + eta2 * eta2 / (f.num(64.0) * kt2 * kt2) +
         (f.num(12.0) + (c1 - one / kt) * eta2) / (f.num(12.0) * kt) + c2 * eta2 / f.num(24.0);
}

template <class F>
Val<F> v_factor(const F& f, const Val<F>& kappa, const Val<F>& sigma1, const Val<F>& t0,
                const Val<F>& eta) {
  const Val<F> L = log(t0);
  const Val<F> first = exp(f.euler_gamma() * kappa) / (kappa * L);
  const Val<F> second =
      f.num(1.0) + (f.log2() + c_backlund(f, sigma1, t0, f.num(2.0), eta)) / L;
  return pow(first, f.lit("3/4")) * pow(second, f.lit("1/4"));
}

/// 1/e up to t0 = e^e, log log t0 / log t0 beyond.
template <class F>
Val<F> b_t0(const F& f, const Val<F>& t0) {
  const Val<F> e = exp(f.num(1.0));
  const Val<F> e_e = exp(e);
  const Val<F> small = f.num(1.0) / e;
  const Val<F> L = log(t0);
  if (F::certainly_le(t0, e_e)) return small;
  const Val<F> large = log(L) / L;
  if (F::certainly_gt(t0, e_e)) return large;
  return F::hull(small, large);
}

/// Threshold that t^{1/6} log t must reach for the half-line bound to take
/// over at abscissa `sigma_right` (t-condition of the convexity estimate).
template <class F>
Val<F> half_line_threshold(const F& f, const Val<F>& sigma_right, const Val<F>& t0) {
  const Val<F> shift = f.lit(literal::half_line_shift);
  return zeta_at(f, sigma_right) /
         (f.lit(literal::half_line_coefficient) *
          pow(f.num(1.0) + a1(f, sigma_right, shift, t0), f.lit("1/6")));
}

template <class F>
Val<F> sixth_root_log(const F& f, const Val<F>& t) {
  return pow(t, f.lit("1/6")) * log(t);
}

/// Half-line-to-one-line convexity factor shared by both A3 variants.
template <class F>
Val<F> convexity_factor(const F& f, const Val<F>& sigma_right, const Val<F>& t0) {
  const Val<F> one = f.num(1.0);
  const Val<F> shift = f.lit(literal::half_line_shift);
  return f.lit(literal::half_line_coefficient) * (one + a0(f, sigma_right, shift, t0)) *
         pow(one + a1(f, sigma_right, shift, t0), f.lit("7/6"));
}

template <class F>
Eval<Val<F>> q_rh(const F& f, const Val<F>& eps, const Val<F>& alpha0, const Val<F>& sigma1,
                  const Val<F>& eta, const Val<F>& t0, const Val<F>& T) {
  const Val<F> one = f.num(1.0);
  const Val<F> half = f.lit("1/2");
  const Val<F> L = log(t0);
  const Val<F> sigma_right = f.lit("3/2") + eps;
  const Val<F> r_ratio = one + half / t0;
  const Val<F> A3 = convexity_factor(f, sigma_right, t0) * pow(r_ratio, f.lit("1/6")) *
                    (one + log(r_ratio) / L) * v_factor(f, eps, sigma1, t0, eta);
  const Val<F> one_minus = one - alpha0;
  Eval<Val<F>> out;
  out.branches.emplace_back(
      "borel_caratheodory",
      f.num(4.0) / (one_minus * one_minus) *
          (f.lit("1/6") + f.num(2.0) * b_t0(f, t0) + log(A3) / L));
  out.branches.emplace_back("trivial", one / ((eps + alpha0 / f.num(2.0)) * L));
  out.margins.emplace_back("epsilon_positive", eps);
  out.margins.emplace_back("epsilon_le_half", half - eps);
  out.margins.emplace_back("alpha0_positive", alpha0);
  out.margins.emplace_back("alpha0_lt_one", one_minus);
  out.margins.emplace_back("t0_ge_3", t0 - f.num(3.0));
  out.margins.emplace_back("t_range_nonempty", T - half - t0);
  out.margins.emplace_back("sigma1_lower", sigma1 - (one + eps));
  out.margins.emplace_back("sigma1_upper", f.num(2.0) - sigma1);
  out.margins.emplace_back("eta_positive", eta);
  out.margins.emplace_back("eta_lt_2t0", f.num(2.0) * t0 - eta);
  out.margins.emplace_back("tcond_RH1", sixth_root_log(f, t0) - half_line_threshold(f, sigma_right, t0));
  // d/dt (t^{1/6} log t) = t^{-5/6} (log t / 6 + 1): the condition only gets easier.
  out.margins.emplace_back("tcond_RH1_monotone", L / f.num(6.0) + one);
  return out;
}

template <class F>
Val<F> a_eps(const F& f, const Val<F>& eps1, const Val<F>& t0) {
  const Val<F> L = log(t0);
  return f.num(1.0) + log(f.num(1.0) + eps1 / L) / L;
}

template <class F>
Val<F> a3_h(const F& f, const Val<F>& d, const Val<F>& sigma1, const Val<F>& eta, const Val<F>& t0) {
  const Val<F> one = f.num(1.0);
  const Val<F> L = log(t0);
  const Val<F> sigma_right = f.lit("3/2") + f.num(2.0) * d / L;
  const Val<F> u = one + one / (f.num(2.0) * t0) + d / (t0 * L);
  return convexity_factor(f, sigma_right, t0) * pow(u, f.lit("1/6")) * (one + log(u) / L) *
         v_factor(f, d / L, sigma1, t0, eta);
}

/// Shared part of the zero-free-region bound. `beta` is given, or pinned to
/// its floor when `pinned` is set. The slacks 1/W0 - d and t0 - H come from
/// the caller, which can form them exactly.
template <class F>
Eval<Val<F>> q_h_common(const F& f, const Val<F>& d, const Val<F>& beta, const Val<F>& eps1,
                        const Val<F>& sigma1, const Val<F>& eta, const Val<F>& t0,
                        const Val<F>& d_slack, const Val<F>& t0_slack, bool pinned) {
  const Val<F> one = f.num(1.0);
  const Val<F> two = f.num(2.0);
  const Val<F> L = log(t0);
  const Val<F> a = a_eps(f, eps1, t0);
  const Val<F> widen = one + one / a;
  const Val<F> shrink = one - f.num(8.0) * d / (two * d + L);
  const Val<F> lambda1 = f.num(16.0) * beta / (one - beta) / (shrink * shrink);
  const Val<F> lambda2 = (one + beta) / (d * (one - beta));
  const Val<F> A3 = a3_h(f, d, sigma1, eta, t0);
  Eval<Val<F>> out;
  out.branches.emplace_back(
      "borel_caratheodory",
      lambda1 * (f.lit("1/6") + two * log(L) / L + log(A3) / L) + lambda2);
  out.branches.emplace_back("trivial", pinned ? one / (two * d) : one / (d * beta * widen + d));
  const Val<F> sigma_right = f.lit("3/2") + two * d / L;
  out.margins.emplace_back("d_positive", d);
  out.margins.emplace_back("d_le_inverse_W0", d_slack);
  out.margins.emplace_back("t0_ge_H", t0_slack);
  out.margins.emplace_back("beta_lt_one", one - beta);
  if (!pinned) out.margins.emplace_back("beta_conds", beta - one / widen);
  out.margins.emplace_back("alpha_cond0_lower", eps1 - two * d / L);
  out.margins.emplace_back("alpha_cond0_upper", f.lit("1/2") - eps1);
  out.margins.emplace_back("alpha_lt_half", f.lit("1/2") - two * d * widen / (L + two * d));
  out.margins.emplace_back("sigma1_lower", sigma1 - (one + d / L));
  out.margins.emplace_back("sigma1_upper", two - sigma1);
  out.margins.emplace_back("eta_positive", eta);
  out.margins.emplace_back("eta_lt_2t0", two * t0 - eta);
  out.margins.emplace_back("tcond_not_RH1",
                           sixth_root_log(f, t0) - half_line_threshold(f, sigma_right, t0));
  out.margins.emplace_back("tcond_not_RH1_monotone", L / f.num(6.0) + one);
  if (!pinned) {
    // W = 1/den must be finite and exceed W0: den > 0 and 1 - W0 den > 0.
    const Val<F> den = d * beta * widen - d;
    out.margins.emplace_back("W_finite", den);
    out.margins.emplace_back("W_gt_W0", one - f.lit(literal::zero_free_W0) * den);
  }
  return out;
}

template <class F>
Val<F> q_h_denominator(const F& f, const Val<F>& d, const Val<F>& beta, const Val<F>& eps1,
                       const Val<F>& t0) {
  return d * beta * (f.num(1.0) + f.num(1.0) / a_eps(f, eps1, t0)) - d;
}

template <class F>
Val<F> pinned_beta(const F& f, const Val<F>& eps1, const Val<F>& t0) {
  return f.num(1.0) / (f.num(1.0) + f.num(1.0) / a_eps(f, eps1, t0));
}

template <class F>
Val<F> ladder_sum(const F& f, const std::vector<std::pair<Val<F>, Val<F>>>& ladder) {
  Val<F> sum = f.num(0.0);
  if (ladder.empty()) return sum;
  for (std::size_t j = 0; j + 1 < ladder.size(); ++j) {
    sum = sum + ladder[j].second * (f.num(1.0) / ladder[j].first - f.num(1.0) / ladder[j + 1].first);
  }
  return sum + ladder.back().second / ladder.back().first;
}

template <class F>
Val<F> c3(const F& f, const Val<F>& t0) {
  const Val<F> one = f.num(1.0);
  return f.lit(literal::one_line_two_thirds) * sqrt(one + f.num(9.0) / (t0 * t0)) *
         pow(one + a0(f, f.num(2.0), one, t0), f.lit("2/3"));
}

template <class F>
void reciprocal_margins(const F& f, Eval<Val<F>>& out, const Val<F>& d1, const Val<F>& t0) {
  out.margins.emplace_back("d1_positive", d1);
  out.margins.emplace_back("t0_ge_13", t0 - f.num(13.0));
}

template <class F>
Eval<Val<F>> y0(const F& f, const Val<F>& d1, const Val<F>& sigma1, const Val<F>& eta,
                const Val<F>& t0, const Val<F>& ladder) {
  const Val<F> one = f.num(1.0);
  const Val<F> L = log(t0);
  Eval<Val<F>> out;
  out.branches.emplace_back("near_one_line", one / d1 + one / L);
  out.branches.emplace_back(
      "ladder", v_factor(f, d1 / L, sigma1, t0, eta) *
                    exp(ladder + f.lit(literal::logderiv_on_one_line) * d1));
  reciprocal_margins(f, out, d1, t0);
  out.margins.emplace_back("sigma1_lower", sigma1 - (one + d1 / L));
  out.margins.emplace_back("sigma1_upper", f.num(2.0) - sigma1);
  out.margins.emplace_back("eta_positive", eta);
  out.margins.emplace_back("eta_lt_2t0", f.num(2.0) * t0 - eta);
  return out;
}

template <class F>
Eval<Val<F>> yprime0(const F& f, const Val<F>& d1, const Val<F>& t0, const Val<F>& ladder) {
  const Val<F> one = f.num(1.0);
  const Val<F> L = log(t0);
  const Val<F> three_quarters = f.lit("3/4");
  const Val<F> scale = pow(c3(f, t0), f.lit("1/4"));
  Eval<Val<F>> out;
  out.branches.emplace_back("near_one_line", scale * pow(one / d1 + one / L, three_quarters));
  out.branches.emplace_back(
      "ladder", scale * exp(ladder + f.lit(literal::logderiv_on_one_line) * d1) *
                    pow(exp(f.euler_gamma() * d1 / L) / d1, three_quarters));
  reciprocal_margins(f, out, d1, t0);
  return out;
}

template <class F>
Val<F> c0_constant(const F& f, const Val<F>& W, const Val<F>& sigma1, const Val<F>& t0,
                   const Val<F>& eta) {
  const Val<F> one = f.num(1.0);
  const Val<F> eta2 = eta * eta;
  const Val<F> inner = log(eta + one / t0) + f.euler_gamma() + one / (f.num(12.0) * eta2) +
                       (one / t0) * (one / (f.num(6.0) * eta2) + one / eta + one) +
                       (f.num(16.0) * (sigma1 * sigma1 + f.num(2.0) * sigma1 - one) + f.num(3.0)) /
                           (f.num(192.0) * eta2 * t0 * t0);
  return exp(one / W) * inner;
}

}  // namespace ezeta::detail
