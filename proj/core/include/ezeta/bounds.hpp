#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ezeta/certified.hpp"
#include "ezeta/param.hpp"
#include "ezeta/precision.hpp"

namespace ezeta {

// ---------------------------------------------------------------- reports

struct ConditionEntry {
  std::string id;
  bool satisfied = false;
  /// Lower bound of lhs - rhs; positive means slack.
  double margin = 0;
};

/// Side-conditions of a bound. An entry is satisfied iff its margin
/// enclosure has a nonnegative lower end.
class ConditionReport {
 public:
  void add(std::string id, const CertifiedReal& margin);
  void add(std::string id, bool satisfied, double margin);
  void merge(const ConditionReport& other, std::string_view prefix = {});

  bool all_satisfied() const;
  const std::vector<ConditionEntry>& entries() const { return entries_; }
  const ConditionEntry* find(std::string_view id) const;
  /// Ids of failed entries, comma separated.
  std::string failures() const;

 private:
  std::vector<ConditionEntry> entries_;
};

/// Where a bound holds: a sigma-constraint together with a t-range.
struct Region {
  enum class Kind {
    half_plane,  // sigma >= sigma_min
    zero_free,   // sigma >= 1 - 1/(W log t)
  };
  Kind kind = Kind::half_plane;
  double sigma_min = 1;
  double W = 0;
  double t_lo = 0;
  double t_hi = std::numeric_limits<double>::infinity();
  /// Upper sigma limit for strip bounds.
  double sigma_max = std::numeric_limits<double>::infinity();

  static Region half_plane(double sigma_min, double t_lo,
                           double t_hi = std::numeric_limits<double>::infinity());
  static Region zero_free(double W, double t_lo,
                          double t_hi = std::numeric_limits<double>::infinity());
  /// Smallest sigma admitted at height t.
  double sigma_floor(double t) const;
  std::string describe() const;
};

struct Branch {
  std::string id;
  CertifiedReal value;
};

/// A constant, where it holds, and the checked side-conditions.
struct ConditionedBound {
  CertifiedReal value;
  Region region;
  ConditionReport conditions;
  /// Candidates of a max{...} expression; `selected` is the largest.
  std::vector<Branch> branches;
  std::size_t selected = 0;
  /// False for nearest-rounded evaluation.
  bool certified = true;

  bool valid() const { return conditions.all_satisfied(); }
};

// ------------------------------------------------------------- parameters

struct KParams {
  Rational k1, k2, k3, k4;
  Rational Q0;
  Rational delta_r;
};

struct RhParams {
  Rational epsilon;
  Rational alpha0;
  Rational sigma1;
  Rational eta;
  Rational t0;
  /// Height up to which RH is assumed; bounds hold for t <= T - 1/2.
  Rational T;

  /// alpha0 = 2(1 + epsilon - sigma0).
  static RhParams from_sigma0(const Rational& sigma0, const Rational& epsilon,
                              const Rational& sigma1, const Rational& eta, const Rational& t0,
                              const Rational& T);
};

struct HParams {
  Rational d;
  Rational beta;
  Rational epsilon1;
  Rational sigma1;
  Rational eta;
  Rational t0;
};

/// Increasing (W_j, Q_j) pairs for the reciprocal-bound ladder.
class LadderTable {
 public:
  LadderTable() = default;
  /// Raises a ladder-order error unless W is strictly increasing and Q > 0.
  explicit LadderTable(std::vector<std::pair<Rational, Rational>> entries);

  const std::vector<std::pair<Rational, Rational>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Entries with W_j >= W_min, preserving order.
  LadderTable from(const Rational& W_min) const;

 private:
  std::vector<std::pair<Rational, Rational>> entries_;
};

struct ReciprocalParams {
  Rational d1;
  Rational sigma1;
  Rational eta;
  Rational t0;
  LadderTable ladder;
  bool asymptotic = false;
};

// ------------------------------------------------------------- operations

struct ATerms {
  CertifiedReal a0;
  CertifiedReal a1;
};

/// a0(sigma, Q0, t) and a1(sigma, Q0, t); t > 1.
ATerms a_terms(const Rational& sigma, const Rational& Q0, const Rational& t,
               const PrecisionContext& ctx = PrecisionContext());

/// Convexity bound for |zeta| in the strip sigma in [1/2, 1 + delta_r],
/// with the sigma-monotonicity condition on t.
ConditionedBound plp_strip_bound(const KParams& kp, const Rational& sigma, const Rational& t,
                                 const Rational& t0,
                                 const PrecisionContext& ctx = PrecisionContext());

/// Coefficient of t^{1/6} log t bounding |zeta| on the strip, with its
/// t-condition at `t`.
ConditionedBound plp_cor_bound(const Rational& delta_r, const Rational& t0, const Rational& t,
                               const PrecisionContext& ctx = PrecisionContext());

/// Constant in |zeta(sigma + it)| <= C3 (log t)^{2/3}; t0 >= 3.
CertifiedReal c3(const Rational& t0, const PrecisionContext& ctx = PrecisionContext());

/// Constant in |zeta(sigma + ikt)| < log(kt) + C for 1 <= sigma <= sigma1.
CertifiedReal c_backlund(const Rational& sigma1, const Rational& t0, const Rational& k,
                         const Rational& eta, const PrecisionContext& ctx = PrecisionContext());

struct StripBound {
  /// Coefficient of log t, e^{1/W}.
  CertifiedReal main_coefficient;
  CertifiedReal constant;
};

/// |zeta| <= e^{1/W} log t + C0 for 1 - 1/(W log t) <= sigma <= sigma1.
StripBound c0_strip(const Rational& W, const Rational& sigma1, const Rational& t0,
                    const Rational& eta, const PrecisionContext& ctx = PrecisionContext());

/// Coefficient of log t bounding 1/|zeta(1 + kappa + it)|.
CertifiedReal v_factor(const Rational& kappa, const Rational& sigma1, const Rational& t0,
                       const Rational& eta, const PrecisionContext& ctx = PrecisionContext());

struct PhiValues {
  CertifiedReal phi0;
  CertifiedReal phi1;
};

/// Truncated Laurent quantities for zeta(sigma) and its log-derivative.
PhiValues phi_family(const Rational& sigma, int k, const PrecisionContext& ctx = PrecisionContext());

/// max{phi1(sigma0, 10), 0.852} for 1 < sigma0 <= 3/2.
CertifiedReal phi2(const Rational& sigma0, const PrecisionContext& ctx = PrecisionContext());

/// Log-derivative bound under RH up to height T.
ConditionedBound q_rh(const RhParams& p, const PrecisionContext& ctx = PrecisionContext());

struct HBound {
  /// Zero-free-region constant W; empty when its denominator is not positive.
  std::optional<CertifiedReal> W;
  ConditionedBound bound;
};

/// Log-derivative bound inside the zero-free region, t >= t0 >= H.
HBound q_h(const HParams& p, const PrecisionContext& ctx = PrecisionContext());

/// Log-derivative bound for sigma >= 1 with beta at its floor.
ConditionedBound q_one(const Rational& d, const Rational& epsilon1, const Rational& sigma1,
                       const Rational& eta, const Rational& t0,
                       const PrecisionContext& ctx = PrecisionContext());

/// Reciprocal bound coefficient of log t.
ConditionedBound y0(const ReciprocalParams& p, const PrecisionContext& ctx = PrecisionContext());

/// Reciprocal bound coefficient of (log t)^{11/12}.
ConditionedBound yprime0(const ReciprocalParams& p,
                         const PrecisionContext& ctx = PrecisionContext());

/// Telescoped ladder sum: sum_{j<J} Q_j (1/W_j - 1/W_{j+1}) + Q_J / W_J.
CertifiedReal ladder_sum(const LadderTable& ladder,
                         const PrecisionContext& ctx = PrecisionContext());

/// Q log t <= [Q log t_hi / log log t_hi] log log t on [t_lo, t_hi], e^e <= t_lo.
CertifiedReal rescale_loglog(const Rational& Q, const Rational& t_lo, const Rational& t_hi,
                             const PrecisionContext& ctx = PrecisionContext());

/// Q / (log t)^{p} on t >= t_lo, at its largest (t = t_lo) when p > 0, or at
/// t_hi when p < 0: re-expresses a c (log t)^a bound as c' (log t)^{a - p}.
CertifiedReal rescale_log_power(const Rational& Q, const Rational& p, const Rational& t_lo,
                                const Rational& t_hi,
                                const PrecisionContext& ctx = PrecisionContext());

/// Joins a bound valid on [t0, t_split] with one valid from t_split on.
ConditionedBound combine_regimes(const ConditionedBound& low, const ConditionedBound& high,
                                 const Rational& t_split,
                                 const PrecisionContext& ctx = PrecisionContext());

struct TrivialBounds {
  CertifiedReal zeta_upper;
  CertifiedReal logderiv_upper;
  CertifiedReal recip_upper;
};

/// Elementary bounds for sigma > 1.
TrivialBounds trivial_bounds(const Rational& sigma, const PrecisionContext& ctx = PrecisionContext());

/// 4/(sigma - 1/2) for 1/2 < sigma <= 3/2, 0 <= t <= 2 exp(e^2).
CertifiedReal aleks_bound(const Rational& sigma, const Rational& t,
                          const PrecisionContext& ctx = PrecisionContext());

/// Closed-form beta giving zero-free-region constant W (other inputs fixed).
Rational beta_for_W(const Rational& W, const Rational& d, const Rational& epsilon1,
                    const Rational& t0);

}  // namespace ezeta
