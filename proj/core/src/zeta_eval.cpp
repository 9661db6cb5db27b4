#include "ezeta/zeta_eval.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "em_plan.hpp"
#include "ezeta/bernoulli.hpp"
#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr unsigned long kSieveLimit = 200000;

CertifiedReal num(double x, mpfr_prec_t bits) { return CertifiedReal(x, bits); }

CertifiedComplex complex_num(double re, double im, mpfr_prec_t bits) {
  return {num(re, bits), num(im, bits)};
}

void check_argument(const CertifiedComplex& s) {
  require(s.re.certainly_positive(), ErrorKind::domain, "Euler-Maclaurin evaluation needs Re s > 0");
  const bool may_be_one = s.re.contains(1.0) && s.im.contains(0.0);
  require(!may_be_one, ErrorKind::pole, "zeta has a pole at s = 1");
}

/// n^{-s} and log n for 1 <= n < N. Composite n reuse a factorisation
/// n = p * (n/p), which costs one complex product instead of exp/sin/cos.
struct PowerTable {
  std::vector<CertifiedReal> logs;
  std::vector<CertifiedComplex> powers;
};

PowerTable power_table(const CertifiedComplex& s, unsigned long N, bool need_logs) {
  const auto bits = s.precision();
  PowerTable table;
  const bool sieve = N <= kSieveLimit;
  std::vector<unsigned> smallest_factor;
  if (sieve) {
    smallest_factor.assign(N, 0);
    for (unsigned long p = 2; p < N; ++p) {
      if (smallest_factor[p] != 0) continue;
      for (unsigned long q = p; q < N; q += p) {
        if (smallest_factor[q] == 0) smallest_factor[q] = static_cast<unsigned>(p);
      }
    }
  }
  table.powers.reserve(N);
  if (need_logs || !sieve) table.logs.reserve(N);
  table.powers.push_back(complex_num(0, 0, bits));  // index 0 unused
  table.powers.push_back(complex_num(1, 0, bits));
  if (need_logs || !sieve) {
    table.logs.push_back(num(0, bits));
    table.logs.push_back(num(0, bits));
  }
  for (unsigned long n = 2; n < N; ++n) {
    const unsigned long p = sieve ? smallest_factor[n] : n;
    if (p == n) {
      const CertifiedReal log_n = CertifiedReal::log_of(n, bits);
      table.powers.push_back(pow_neg(log_n, s));
      if (need_logs || !sieve) table.logs.push_back(log_n);
    } else {
      table.powers.push_back(table.powers[p] * table.powers[n / p]);
      if (need_logs) table.logs.push_back(table.logs[p] + table.logs[n / p]);
    }
  }
  return table;
}

CertifiedComplex scale(const CertifiedComplex& z, const CertifiedReal& x) { return {z.re * x, z.im * x}; }

CertifiedComplex signed_bernoulli(unsigned two_k, mpfr_prec_t bits) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), two_k);
  return {enclose(mpq_class(bernoulli(two_k) / mpq_class(fact)), bits), num(0, bits)};
}

EMResult evaluate(const CertifiedComplex& s, const PrecisionContext& ctx, const EMOptions& opts,
                  bool derivative) {
  check_argument(s);
  const auto bits = std::max(ctx.bits(), s.precision());
  const double sigma_lo = s.re.lower_double();
  const double abs_t = std::max(std::fabs(s.im.lower_double()), std::fabs(s.im.upper_double()));
  const double log_target =
      opts.log10_target.value_or(-ctx.working_digits() / 2.0) * kLn10;
  const auto n_min = std::max<unsigned long>(2, static_cast<unsigned long>(std::ceil(abs_t / 2)));

  detail::EmPlan plan;
  if (opts.N != 0) {
    require(opts.N >= 2, ErrorKind::domain, "truncation point must be at least 2");
    plan.N = opts.N;
    plan.order = opts.order ? opts.order : 1;
  } else {
    plan = detail::plan_em(sigma_lo, abs_t + std::fabs(s.re.upper_double()) - sigma_lo,
                           log_target - std::log(4.0), n_min, opts.N_cap, opts.order, derivative);
  }

  const CertifiedComplex one = complex_num(1, 0, bits);
  for (int attempt = 0;; ++attempt) {
    const unsigned long N = plan.N;
    const PowerTable table = power_table(s, N, derivative);
    CertifiedComplex sum = complex_num(0, 0, bits);
    for (unsigned long n = 1; n < N; ++n) {
      if (derivative) {
        if (n > 1) sum -= scale(table.powers[n], table.logs[n]);
      } else {
        sum += table.powers[n];
      }
    }

    const CertifiedReal big_N = num(static_cast<double>(N), bits);
    const CertifiedReal log_N = CertifiedReal::log_of(N, bits);
    const CertifiedComplex N_pow = pow_neg(log_N, s);  // N^{-s}
    const CertifiedComplex s_minus_one = s - one;
    const CertifiedComplex head = scale(N_pow, big_N) / s_minus_one;  // N^{1-s}/(s-1)
    if (derivative) {
      sum -= scale(head, log_N) + head / s_minus_one;
      sum -= scale(N_pow, log_N.ldexp(-1));
    } else {
      sum += head;
      sum += scale(N_pow, num(0.5, bits));
    }

    // Rising factorial (s)_j and its s-derivative, advanced two steps per k.
    CertifiedComplex rising = s;
    CertifiedComplex rising_d = one;
    const CertifiedReal inv_N = num(1, bits) / big_N;
    const CertifiedReal inv_N2 = sqr(inv_N);
    CertifiedComplex x_pow = scale(N_pow, inv_N);  // N^{-s-2k+1}
    auto step = [&](double shift) {
      const CertifiedComplex factor = s + complex_num(shift, 0, bits);
      rising_d = rising_d * factor + rising;
      rising = rising * factor;
    };
    for (unsigned k = 1; k <= plan.order; ++k) {
      const CertifiedComplex c = signed_bernoulli(2 * k, bits);
      if (derivative) {
        sum += c * (rising_d - scale(rising, log_N)) * x_pow;
      } else {
        sum += c * rising * x_pow;
      }
      if (k < plan.order) {
        step(2.0 * k - 1);
        step(2.0 * k);
        x_pow = scale(x_pow, inv_N2);
      }
    }
    step(2.0 * plan.order - 1);  // now (s)_{2m}

    // Tail bounds; a = sigma + 2m - 1 taken at its smallest value.
    const CertifiedReal a = num(s.re.lower_double(), bits) + num(2.0 * plan.order - 1, bits);
    require(a.certainly_positive(), ErrorKind::domain, "tail exponent not positive");
    const CertifiedReal a_lo(a.lower(), a.lower());
    const CertifiedReal x_mod = exp(-((a_lo)*log_N));  // N^{1-sigma-2m} at sigma_lo
    const CertifiedReal coeff = enclose(bernoulli_over_factorial(2 * plan.order), bits);
    CertifiedReal tail = coeff * x_mod / a_lo;
    if (derivative) {
      tail = tail * (abs(rising_d) + abs(rising) * (log_N + num(1, bits) / a_lo));
    } else {
      tail = tail * abs(rising);
    }
    const double tail_hi = tail.upper_double();
    const bool met = opts.N != 0 || std::log(tail_hi) <= log_target;
    if (met || attempt >= 6 || plan.N >= opts.N_cap) {
      require(met, ErrorKind::nonconvergence, "radius target not met below the N cap");
      EMResult out;
      out.value = sum.inflated(tail.upper());
      out.N = N;
      out.order = plan.order;
      out.tail = tail_hi;
      return out;
    }
    plan.N = std::min(opts.N_cap, plan.N + plan.N / 4 + 1);
  }
}

CertifiedComplex point(std::complex<double> s, mpfr_prec_t bits) {
  return complex_num(s.real(), s.imag(), bits);
}

}  // namespace

EMResult em_zeta_enclosure(const CertifiedComplex& s, const PrecisionContext& ctx,
                           const EMOptions& opts) {
  return evaluate(s, ctx, opts, false);
}

EMResult em_zeta_deriv_enclosure(const CertifiedComplex& s, const PrecisionContext& ctx,
                                 const EMOptions& opts) {
  return evaluate(s, ctx, opts, true);
}

CertifiedComplex em_zeta(std::complex<double> s, const PrecisionContext& ctx, const EMOptions& opts) {
  return evaluate(point(s, ctx.bits()), ctx, opts, false).value;
}

CertifiedComplex em_zeta_deriv(std::complex<double> s, const PrecisionContext& ctx,
                               const EMOptions& opts) {
  return evaluate(point(s, ctx.bits()), ctx, opts, true).value;
}

namespace {

struct Node {
  double t;
  CertifiedReal modulus;  // enclosure of |zeta(sigma + it)|
};

class SegmentEvaluator {
 public:
  SegmentEvaluator(double sigma, const PrecisionContext& ctx, const SupOptions& opts)
      : sigma_(sigma), ctx_(ctx), opts_(opts), lipschitz_ctx_(PrecisionContext::kMinDigits) {}

  Node node(double t) {
    ++evaluations_;
    const CertifiedComplex z = em_zeta({sigma_, t}, ctx_);
    CertifiedReal m = abs(z);
    if (opts_.target == SupTarget::reciprocal) {
      require(!m.contains_zero(), ErrorKind::zero_crossing,
              "|zeta| enclosure contains 0 at t = " + std::to_string(t));
    }
    return {t, std::move(m)};
  }

  /// Upper bound of |zeta'| on sigma + i[a, b].
  double lipschitz(double a, double b) {
    ++evaluations_;
    const auto bits = lipschitz_ctx_.bits();
    const CertifiedComplex s{num(sigma_, bits),
                             CertifiedReal::hull(num(a, bits), num(b, bits))};
    EMOptions o;
    o.log10_target = -8;
    return abs(em_zeta_deriv_enclosure(s, lipschitz_ctx_, o).value).upper_double();
  }

  /// Weight 1 or 1/log t, as an enclosure at a point.
  CertifiedReal weight(double t) const {
    const auto bits = ctx_.bits();
    if (!opts_.per_log_t) return num(1, bits);
    return num(1, bits) / log(num(t, bits));
  }

  /// Value of the target quantity at a node.
  CertifiedReal value(const Node& n) const {
    const auto bits = ctx_.bits();
    CertifiedReal v = opts_.target == SupTarget::modulus ? n.modulus : num(1, bits) / n.modulus;
    return v * weight(n.t);
  }

  /// Upper bound of the target quantity on [a, b] given endpoint nodes, or
  /// +inf when |zeta| cannot be bounded away from zero there.
  double piece_upper(const Node& a, const Node& b, double lip) const {
    const auto bits = ctx_.bits();
    const CertifiedReal half_span = num(lip, bits) * (num(b.t, bits) - num(a.t, bits)).ldexp(-1);
    // The weight is largest at the left end (constant or decreasing).
    const CertifiedReal w = weight(a.t);
    if (opts_.target == SupTarget::modulus) {
      const CertifiedReal upper(a.modulus.upper(), a.modulus.upper());
      const CertifiedReal upper_b(b.modulus.upper(), b.modulus.upper());
      return (((upper + upper_b).ldexp(-1) + half_span) * w).upper_double();
    }
    const CertifiedReal lower_a(a.modulus.lower(), a.modulus.lower());
    const CertifiedReal lower_b(b.modulus.lower(), b.modulus.lower());
    const CertifiedReal floor = (lower_a + lower_b).ldexp(-1) - half_span;
    if (!floor.certainly_positive()) return std::numeric_limits<double>::infinity();
    return (w / floor).upper_double();
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  double sigma_;
  const PrecisionContext& ctx_;
  const SupOptions& opts_;
  PrecisionContext lipschitz_ctx_;
  std::size_t evaluations_ = 0;
};

struct Piece {
  Node a;
  Node b;
  double upper;
  bool operator<(const Piece& other) const { return upper < other.upper; }
};

}  // namespace

GridResult grid_max_on_segment(double sigma, double t_lo, double t_hi, double step,
                               SupTarget target, bool per_log_t, const PrecisionContext& ctx) {
  require(t_lo <= t_hi && step > 0, ErrorKind::domain, "bad grid");
  require(!per_log_t || t_lo > 1, ErrorKind::domain, "per-log-t weighting needs t > 1");
  SupOptions opts;
  opts.target = target;
  opts.per_log_t = per_log_t;
  SegmentEvaluator eval(sigma, ctx, opts);
  GridResult out;
  bool first = true;
  const auto count = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step + 1e-9));
  for (std::size_t i = 0; i <= count + 1; ++i) {
    double t = t_lo + static_cast<double>(i) * step;
    if (i == count + 1) {
      if (t_lo + static_cast<double>(count) * step >= t_hi) break;
      t = t_hi;
    }
    const CertifiedReal v = eval.value(eval.node(t));
    if (first || out.max.lower() < v.lower()) out.argmax_t = t;
    out.max = first ? v : max(out.max, v);
    first = false;
    ++out.nodes;
  }
  return out;
}

SupResult sup_modulus_on_segment(double sigma, double t_lo, double t_hi, const PrecisionContext& ctx,
                                 const SupOptions& opts) {
  require(sigma > 0, ErrorKind::domain, "segment must lie in Re s > 0");
  require(t_lo < t_hi, ErrorKind::domain, "empty segment");
  require(!(sigma == 1 && t_lo <= 0 && t_hi >= 0), ErrorKind::pole, "segment passes through s = 1");
  require(!opts.per_log_t || t_lo > 1, ErrorKind::domain, "per-log-t weighting needs t > 1");

  if (!opts.certified) {
    const GridResult g =
        grid_max_on_segment(sigma, t_lo, t_hi, opts.grid_step, opts.target, opts.per_log_t, ctx);
    SupResult out;
    out.value = g.max;
    out.certified = false;
    out.evaluations = g.nodes;
    out.argmax_t = g.argmax_t;
    return out;
  }

  SegmentEvaluator eval(sigma, ctx, opts);
  Node first = eval.node(t_lo);
  Node last = eval.node(t_hi);
  CertifiedReal best = max(eval.value(first), eval.value(last));
  double argmax = eval.value(first).lower() < eval.value(last).lower() ? t_hi : t_lo;

  std::priority_queue<Piece> queue;
  queue.push({first, last, eval.piece_upper(first, last, eval.lipschitz(t_lo, t_hi))});
  SupResult out;
  while (true) {
    const Piece& top = queue.top();
    const double global_upper = top.upper;
    const double attained = best.lower_double();
    if (opts.claimed_bound && global_upper <= *opts.claimed_bound) {
      out.below_claim = true;
      break;
    }
    const double margin = opts.claimed_bound ? std::fabs(*opts.claimed_bound - attained) : attained;
    if (global_upper - attained <= opts.relative_tolerance * std::max(margin, 1e-300)) break;
    require(eval.evaluations() < opts.node_cap, ErrorKind::budget,
            "adaptive refinement exceeded the node cap");
    Piece piece = top;
    queue.pop();
    const double mid = 0.5 * (piece.a.t + piece.b.t);
    require(mid > piece.a.t && mid < piece.b.t, ErrorKind::budget, "segment resolution exhausted");
    Node m = eval.node(mid);
    const CertifiedReal v = eval.value(m);
    if (best.upper() < v.upper()) argmax = mid;
    best = max(best, v);
    queue.push({piece.a, m, eval.piece_upper(piece.a, m, eval.lipschitz(piece.a.t, mid))});
    queue.push({m, piece.b, eval.piece_upper(m, piece.b, eval.lipschitz(mid, piece.b.t))});
  }
  const auto bits = ctx.bits();
  Real upper(queue.top().upper, bits);
  out.value = CertifiedReal(min(best.lower(), upper), max(upper, best.lower()));
  out.certified = true;
  out.evaluations = eval.evaluations();
  out.argmax_t = argmax;
  return out;
}

}  // namespace ezeta
