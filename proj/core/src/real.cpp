#include "ezeta/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "ezeta/error.hpp"

namespace ezeta {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::parse(std::string_view text, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real out(bits);
  std::string s(text);
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    // p/q: round numerator and denominator in opposite directions, then
    // divide in the requested one, so directed rounding stays one-sided
    // for positive quotients.
    Real num = parse(s.substr(0, slash), bits + 32, rnd);
    const mpfr_rnd_t den_rnd =
        rnd == MPFR_RNDU ? MPFR_RNDD : (rnd == MPFR_RNDD ? MPFR_RNDU : rnd);
    Real den = parse(s.substr(slash + 1), bits + 32, den_rnd);
    require(!den.is_zero(), ErrorKind::domain, "zero denominator in '" + s + "'");
    mpfr_div(out.value_, num.value_, den.value_, rnd);
    return out;
  }
  if (mpfr_set_str(out.value_, s.c_str(), 10, rnd) != 0) {
    raise(ErrorKind::usage, "not a number: '" + s + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits, mpfr_rnd_t rnd) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "R*e";
  mpfr_asprintf(&raw, fmt.c_str(), rnd, value_);
  std::unique_ptr<char, void (*)(char*)> guard(raw, mpfr_free_str);
  return std::string(raw);
}

void Real::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <class Fn>
Real unary(const Real& x, Fn fn) {
  Real out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }

Real pow(const Real& x, const Real& y) {
  Real out(std::max(x.precision(), y.precision()));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

}  // namespace ezeta
