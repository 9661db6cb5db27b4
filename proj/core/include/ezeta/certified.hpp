#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "ezeta/precision.hpp"
#include "ezeta/real.hpp"

namespace ezeta {

/// A real number known to lie in a closed interval.
///
/// Stored as endpoints; every operation rounds the lower endpoint down and the
/// upper endpoint up, so the true result of the exact operation on any points
/// of the operand intervals lies in the output. The midpoint/radius view is
/// derived, with the radius rounded up.
class CertifiedReal {
 public:
  explicit CertifiedReal(mpfr_prec_t bits = 64);
  /// Exact enclosure of a binary64 value (widened to `bits` if needed).
  CertifiedReal(double value, mpfr_prec_t bits);
  CertifiedReal(const Real& lo, const Real& hi);

  /// Encloses the decimal (or "p/q") number in `text`.
  static CertifiedReal parse(std::string_view text, mpfr_prec_t bits);
  static CertifiedReal from_mid_rad(const Real& mid, const Real& rad);
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);

  static CertifiedReal pi(mpfr_prec_t bits);
  static CertifiedReal euler_gamma(mpfr_prec_t bits);
  static CertifiedReal log2(mpfr_prec_t bits);
  /// Encloses log(n) for a positive integer n.
  static CertifiedReal log_of(unsigned long n, mpfr_prec_t bits);

  const Real& lower() const noexcept { return lo_; }
  const Real& upper() const noexcept { return hi_; }
  Real mid() const;
  /// Radius about mid(), rounded up: [mid - rad, mid + rad] contains *this.
  Real rad() const;
  Real width() const;
  mpfr_prec_t precision() const noexcept { return lo_.precision(); }

  double lower_double() const { return lo_.to_double(MPFR_RNDD); }
  double upper_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const { return mid().to_double(); }

  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  bool contains(double x) const;
  bool contains(const CertifiedReal& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool overlaps(const CertifiedReal& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }
  bool certainly_less(const CertifiedReal& other) const { return hi_ < other.lo_; }
  bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }

  CertifiedReal& operator+=(const CertifiedReal& rhs);
  CertifiedReal& operator-=(const CertifiedReal& rhs);
  CertifiedReal& operator*=(const CertifiedReal& rhs);
  CertifiedReal& operator/=(const CertifiedReal& rhs);

  friend CertifiedReal operator+(CertifiedReal a, const CertifiedReal& b) { return a += b; }
  friend CertifiedReal operator-(CertifiedReal a, const CertifiedReal& b) { return a -= b; }
  friend CertifiedReal operator*(CertifiedReal a, const CertifiedReal& b) { return a *= b; }
  friend CertifiedReal operator/(CertifiedReal a, const CertifiedReal& b) { return a /= b; }
  CertifiedReal operator-() const;

  /// Scale by 2^k exactly.
  CertifiedReal ldexp(long k) const;
  /// Widen symmetrically by a nonnegative amount.
  CertifiedReal inflated(const Real& amount) const;
  /// Intersection; the operands must overlap.
  CertifiedReal intersect(const CertifiedReal& other) const;

  /// "mid +/- rad" with the given number of significant digits.
  std::string to_string(int digits = 20) const;

 private:
  Real lo_;
  Real hi_;
};

CertifiedReal sqr(const CertifiedReal& x);
CertifiedReal pown(const CertifiedReal& x, unsigned n);
CertifiedReal abs(const CertifiedReal& x);
CertifiedReal sqrt(const CertifiedReal& x);
CertifiedReal exp(const CertifiedReal& x);
CertifiedReal log(const CertifiedReal& x);
CertifiedReal log1p(const CertifiedReal& x);
/// x^y for x > 0.
CertifiedReal pow(const CertifiedReal& x, const CertifiedReal& y);
CertifiedReal cos(const CertifiedReal& x);
CertifiedReal sin(const CertifiedReal& x);
CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);

/// Complex enclosure as a rectangle.
struct CertifiedComplex {
  CertifiedReal re;
  CertifiedReal im;

  CertifiedComplex() = default;
  CertifiedComplex(CertifiedReal r, CertifiedReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const noexcept { return re.precision(); }

  CertifiedComplex& operator+=(const CertifiedComplex& rhs);
  CertifiedComplex& operator-=(const CertifiedComplex& rhs);
  CertifiedComplex& operator*=(const CertifiedComplex& rhs);
  CertifiedComplex& operator*=(const CertifiedReal& rhs);
  CertifiedComplex& operator/=(const CertifiedComplex& rhs);

  friend CertifiedComplex operator+(CertifiedComplex a, const CertifiedComplex& b) { return a += b; }
  friend CertifiedComplex operator-(CertifiedComplex a, const CertifiedComplex& b) { return a -= b; }
  friend CertifiedComplex operator*(CertifiedComplex a, const CertifiedComplex& b) { return a *= b; }
  friend CertifiedComplex operator*(CertifiedComplex a, const CertifiedReal& b) { return a *= b; }
  friend CertifiedComplex operator/(CertifiedComplex a, const CertifiedComplex& b) { return a /= b; }

  CertifiedComplex conj() const { return {re, -im}; }
  /// Grows both parts by `amount` so the rectangle covers a disc of that radius.
  CertifiedComplex inflated(const Real& amount) const {
    return {re.inflated(amount), im.inflated(amount)};
  }
};

/// Enclosure of |z|.
CertifiedReal abs(const CertifiedComplex& z);
/// Enclosure of |z|^2.
CertifiedReal norm(const CertifiedComplex& z);
/// exp(-s * log n) for a positive integer n with log n supplied.
CertifiedComplex pow_neg(const CertifiedReal& log_n, const CertifiedComplex& s);

}  // namespace ezeta
