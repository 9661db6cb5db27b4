#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "ezeta/error.hpp"

namespace ezeta::detail {

/// Truncation point and Bernoulli order for an Euler-Maclaurin evaluation.
struct EmPlan {
  unsigned long N = 2;
  unsigned order = 1;
};

/// Picks (N, order) so the tail bound of order m,
///   |(s)_{2m}| |B_{2m}|/(2m)! N^{1-sigma-2m} / (sigma+2m-1),
/// is below exp(log_target), minimising a rough cost N + 2m. Works in the log
/// domain with the estimate |B_{2m}|/(2m)! <= 2 zeta(2)/(2 pi)^{2m}.
/// `fixed_order` = 0 lets the order float.
inline EmPlan plan_em(double sigma, double abs_t, double log_target, unsigned long n_min,
                      unsigned long n_cap, unsigned fixed_order, bool derivative) {
  constexpr unsigned kMaxOrder = 400;
  const double log_two_pi = std::log(2 * std::numbers::pi);
  const double log_bern = std::log(2 * std::numbers::pi * std::numbers::pi / 6);
  EmPlan best{};
  double best_cost = std::numeric_limits<double>::infinity();
  double log_rising = 0;  // log |(s)_{2m}| upper estimate
  double inv_sum = 0;     // sum 1/|s+i|
  const unsigned lo = fixed_order ? fixed_order : 1;
  const unsigned hi = fixed_order ? fixed_order : kMaxOrder;
  unsigned filled = 0;
  for (unsigned m = 1; m <= hi; ++m) {
    for (; filled < 2 * m; ++filled) {
      const double mod = std::hypot(sigma + filled, abs_t);
      log_rising += std::log(mod);
      inv_sum += 1 / std::max(mod, 1e-300);
    }
    if (m < lo) continue;
    const double a = sigma + 2 * m - 1;
    const double base = log_rising + log_bern - 2 * m * log_two_pi - std::log(a);
    double log_n = std::max(std::log(static_cast<double>(n_min)), (base - log_target) / a);
    if (derivative) {
      // Extra factor (sum 1/|s+i| + log N + 1/a); two refinement passes suffice.
      for (int pass = 0; pass < 2; ++pass) {
        const double extra = std::log(inv_sum + log_n + 1 / a);
        log_n = std::max(std::log(static_cast<double>(n_min)), (base + extra - log_target) / a);
      }
    }
    if (log_n > std::log(static_cast<double>(n_cap))) continue;
    const auto n = std::max(n_min, static_cast<unsigned long>(std::ceil(std::exp(log_n))));
    const double cost = static_cast<double>(n) + 2.0 * m;
    if (cost < best_cost) {
      best_cost = cost;
      best = EmPlan{n, m};
    }
  }
  require(best_cost < std::numeric_limits<double>::infinity(), ErrorKind::nonconvergence,
          "no truncation point up to the cap meets the radius target");
  return best;
}

}  // namespace ezeta::detail
