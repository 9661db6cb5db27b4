#include "ezeta/precision.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {
constexpr int kGuardBits = 16;
}

PrecisionContext::PrecisionContext(int working_digits, RoundingPolicy policy)
    : digits_(working_digits), policy_(policy) {
  require(working_digits >= kMinDigits, ErrorKind::domain,
          "working precision " + std::to_string(working_digits) +
              " digits is below the minimum of " + std::to_string(kMinDigits));
  require(working_digits <= kMaxDigits, ErrorKind::domain,
          "working precision " + std::to_string(working_digits) +
              " digits exceeds " + std::to_string(kMaxDigits));
  bits_ = static_cast<mpfr_prec_t>(
              std::ceil(working_digits * 3.321928094887362)) +
          kGuardBits;
}

PrecisionContext PrecisionContext::from_environment(RoundingPolicy policy) {
  const char* env = std::getenv("EZETA_PRECISION");
  if (env == nullptr || *env == '\0') return PrecisionContext(kDefaultDigits, policy);
  char* end = nullptr;
  const long digits = std::strtol(env, &end, 10);
  require(end != env && *end == '\0', ErrorKind::usage,
          std::string("EZETA_PRECISION is not an integer: '") + env + "'");
  return PrecisionContext(static_cast<int>(digits), policy);
}

}  // namespace ezeta
