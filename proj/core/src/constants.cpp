#include "ezeta/constants.hpp"

#include <cmath>

namespace ezeta {

namespace {

double ceil_double(const CertifiedReal& x) { return x.upper().to_double(MPFR_RNDU); }

}  // namespace

namespace approx {

double inverse_W0_floor() {
  const CertifiedReal inv = CertifiedReal(1.0, 128) / CertifiedReal::parse(literal::zero_free_W0, 128);
  return inv.lower().to_double(MPFR_RNDD);
}

double e_to_e_ceil() {
  const CertifiedReal e = exp(CertifiedReal(1.0, 128));
  return ceil_double(exp(e));
}

double two_exp_e_squared_ceil() {
  const CertifiedReal e = exp(CertifiedReal(1.0, 128));
  return ceil_double(exp(sqr(e)).ldexp(1));
}

}  // namespace approx

Constants Constants::at(const PrecisionContext& ctx) {
  const auto bits = ctx.bits();
  auto lit = [bits](std::string_view s) { return CertifiedReal::parse(s, bits); };
  const CertifiedReal h0 = lit(literal::riemann_height);
  return Constants{
      lit(literal::zero_free_W0),
      h0,
      h0 - lit("0.5"),
      CertifiedReal::euler_gamma(bits),
      lit(literal::half_line_coefficient),
      lit(literal::one_line_two_thirds),
      lit(literal::small_t_half_line),
      lit(literal::small_t_reciprocal),
      lit(literal::large_t_logderiv),
  };
}

}  // namespace ezeta
