#pragma once

#include <mpfr.h>

#include <cstdint>

namespace ezeta {

enum class RoundingPolicy {
  nearest,  // explore flows: fast, no enclosure guarantee on the constants
  outward,  // verify flows: upper bounds rounded up, lower bounds down
};

/// Working precision and rounding policy shared by every computation.
///
/// Digits are decimal-digit equivalents; the binary precision handed to MPFR
/// carries a few guard bits on top. Contexts below 30 digits cannot be built,
/// which is what keeps certified table reproduction out of reach for them.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 60;
  static constexpr int kMinDigits = 30;
  static constexpr int kMaxDigits = 4000;

  explicit PrecisionContext(int working_digits = kDefaultDigits,
                            RoundingPolicy policy = RoundingPolicy::outward);

  int working_digits() const noexcept { return digits_; }
  RoundingPolicy rounding_policy() const noexcept { return policy_; }
  mpfr_prec_t bits() const noexcept { return bits_; }

  PrecisionContext with_digits(int digits) const {
    return PrecisionContext(digits, policy_);
  }
  PrecisionContext with_policy(RoundingPolicy policy) const {
    return PrecisionContext(digits_, policy);
  }
  /// Same policy at twice the digits; used for soundness re-checks.
  PrecisionContext doubled() const { return with_digits(2 * digits_); }

  /// Reads EZETA_PRECISION when set, otherwise the default digits.
  static PrecisionContext from_environment(
      RoundingPolicy policy = RoundingPolicy::outward);

 private:
  int digits_;
  RoundingPolicy policy_;
  mpfr_prec_t bits_;
};

}  // namespace ezeta
