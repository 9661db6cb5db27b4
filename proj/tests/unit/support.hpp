#pragma once

#include <string_view>

#include "ezeta/certified.hpp"
#include "ezeta/precision.hpp"

namespace ezeta::test {

inline const PrecisionContext& ctx60() {
  static const PrecisionContext ctx(60);
  return ctx;
}

/// Reference values carry 30 significant digits; widen by a few ulps of that.
inline CertifiedReal reference(std::string_view text, mpfr_prec_t bits, double rel = 1e-28) {
  CertifiedReal x = CertifiedReal::parse(text, bits);
  return x.inflated(Real(std::abs(x.mid_double()) * rel + 1e-300, bits));
}

/// True when `value` is consistent with the reference and reasonably tight.
inline bool encloses(const CertifiedReal& value, std::string_view text, double rel = 1e-28) {
  return value.is_finite() && value.overlaps(reference(text, value.precision(), rel)) &&
         value.rad().to_double() <= std::abs(value.mid_double()) * 1e-20 + 1e-40;
}

inline double rel_diff(const CertifiedReal& value, double expected) {
  return std::abs(value.mid_double() - expected) / std::abs(expected);
}

}  // namespace ezeta::test
