#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace ezeta {

/// Owning MPFR float with a fixed binary precision.
///
/// Arithmetic operators round to nearest and produce a result at the larger
/// of the operand precisions. Directed-rounding work goes through the raw
/// handles (get()) in CertifiedReal.
class Real {
 public:
  Real() : Real(static_cast<mpfr_prec_t>(64)) {}
  explicit Real(mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);

  /// Parses a decimal (or "p/q") string with the given rounding direction.
  static Real parse(std::string_view text, mpfr_prec_t bits,
                    mpfr_rnd_t rnd = MPFR_RNDN);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const {
    return mpfr_get_d(value_, rnd);
  }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  void widen_to(mpfr_prec_t bits);

  mpfr_t value_;
};

Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, const Real& y);
Real abs(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace ezeta
