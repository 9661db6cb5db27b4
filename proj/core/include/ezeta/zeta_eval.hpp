#pragma once

#include <complex>
#include <cstddef>
#include <optional>

#include "ezeta/certified.hpp"
#include "ezeta/precision.hpp"

namespace ezeta {

/// Controls for the Euler-Maclaurin evaluator.
struct EMOptions {
  /// Bernoulli order m; 0 picks it together with N. Order 1 is the classical
  /// form with tail |s(s+1)|/2 * 1/(6(sigma+1) N^{sigma+1}).
  unsigned order = 0;
  /// Truncation point; 0 picks the smallest adequate N >= max(2, ceil(|t|/2)).
  unsigned long N = 0;
  unsigned long N_cap = 1000000;
  /// Radius target as a base-10 exponent; default -(working_digits / 2).
  std::optional<double> log10_target;
};

struct EMResult {
  CertifiedComplex value;
  unsigned long N = 0;
  unsigned order = 0;
  /// Upper bound on the Euler-Maclaurin tail folded into `value`.
  double tail = 0;
};

/// zeta(s) for Re s > 0, s != 1.
CertifiedComplex em_zeta(std::complex<double> s, const PrecisionContext& ctx,
                         const EMOptions& opts = {});
/// zeta'(s) for Re s > 0, s != 1.
CertifiedComplex em_zeta_deriv(std::complex<double> s, const PrecisionContext& ctx,
                               const EMOptions& opts = {});

/// Variants taking an enclosure of s; the result contains zeta (or zeta')
/// at every point of the rectangle.
EMResult em_zeta_enclosure(const CertifiedComplex& s, const PrecisionContext& ctx,
                           const EMOptions& opts = {});
EMResult em_zeta_deriv_enclosure(const CertifiedComplex& s, const PrecisionContext& ctx,
                                 const EMOptions& opts = {});

enum class SupTarget {
  modulus,     // |zeta(sigma + it)|
  reciprocal,  // 1 / |zeta(sigma + it)|
};

struct SupOptions {
  SupTarget target = SupTarget::modulus;
  /// Divide by log t (requires t_lo > 1).
  bool per_log_t = false;
  /// Adaptive bisection with Lipschitz brackets; otherwise a plain grid.
  bool certified = true;
  /// Stop as soon as every piece is certified below this value.
  std::optional<double> claimed_bound;
  /// Bracket tolerance relative to the claim's margin (or the value).
  double relative_tolerance = 1e-4;
  std::size_t node_cap = 200000;
  /// Spacing of the heuristic grid.
  double grid_step = 0.01;
};

struct SupResult {
  /// Upper end is an upper bound for the supremum when `certified`;
  /// lower end is a value attained on the segment.
  CertifiedReal value;
  bool certified = false;
  std::size_t evaluations = 0;
  double argmax_t = 0;
  /// Set when a claim was given and every piece was certified below it.
  bool below_claim = false;
};

/// Supremum of |zeta| (or 1/|zeta|, optionally divided by log t) over
/// sigma + it, t in [t_lo, t_hi].
SupResult sup_modulus_on_segment(double sigma, double t_lo, double t_hi,
                                 const PrecisionContext& ctx, const SupOptions& opts = {});

struct GridResult {
  /// Enclosure of the largest node value.
  CertifiedReal max;
  double argmax_t = 0;
  std::size_t nodes = 0;
};

/// Certified node values on t_lo, t_lo + step, ..., t_hi (t_hi always
/// included). Only the nodes are certified, not the gaps between them.
GridResult grid_max_on_segment(double sigma, double t_lo, double t_hi, double step,
                               SupTarget target, bool per_log_t, const PrecisionContext& ctx);

}  // namespace ezeta
