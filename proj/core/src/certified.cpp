#include "ezeta/certified.hpp"

#include <algorithm>
#include <utility>

#include "ezeta/error.hpp"

namespace ezeta {

namespace {

mpfr_prec_t joint(const CertifiedReal& a, const CertifiedReal& b) {
  return std::max(a.precision(), b.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(BinaryOp op, const Real& a, const Real& b, mpfr_rnd_t rnd, mpfr_prec_t bits) {
  Real out(bits);
  op(out.get(), a.get(), b.get(), rnd);
  return out;
}

Real apply(UnaryOp op, const Real& a, mpfr_rnd_t rnd, mpfr_prec_t bits) {
  Real out(bits);
  op(out.get(), a.get(), rnd);
  return out;
}

// Encloses an increasing function by its values at the endpoints.
CertifiedReal monotone(UnaryOp op, const CertifiedReal& x) {
  const auto bits = x.precision();
  return CertifiedReal(apply(op, x.lower(), MPFR_RNDD, bits),
                       apply(op, x.upper(), MPFR_RNDU, bits));
}

CertifiedReal constant(int (*fn)(mpfr_ptr, mpfr_rnd_t), mpfr_prec_t bits) {
  Real lo(bits), hi(bits);
  fn(lo.get(), MPFR_RNDD);
  fn(hi.get(), MPFR_RNDU);
  return CertifiedReal(lo, hi);
}

}  // namespace

CertifiedReal::CertifiedReal(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

CertifiedReal::CertifiedReal(double value, mpfr_prec_t bits)
    : lo_(value, std::max<mpfr_prec_t>(bits, 53)),
      hi_(value, std::max<mpfr_prec_t>(bits, 53)) {
  require(lo_.is_finite(), ErrorKind::domain, "non-finite value");
}

CertifiedReal::CertifiedReal(const Real& lo, const Real& hi) : lo_(lo), hi_(hi) {
  require(!lo.is_nan() && !hi.is_nan(), ErrorKind::domain, "NaN endpoint");
  require(lo <= hi, ErrorKind::domain, "interval endpoints out of order");
  const auto bits = std::max(lo.precision(), hi.precision());
  if (lo_.precision() < bits) mpfr_prec_round(lo_.get(), bits, MPFR_RNDD);
  if (hi_.precision() < bits) mpfr_prec_round(hi_.get(), bits, MPFR_RNDU);
}

CertifiedReal CertifiedReal::parse(std::string_view text, mpfr_prec_t bits) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return parse(text.substr(0, slash), bits) / parse(text.substr(slash + 1), bits);
  }
  return CertifiedReal(Real::parse(text, bits, MPFR_RNDD), Real::parse(text, bits, MPFR_RNDU));
}

CertifiedReal CertifiedReal::from_mid_rad(const Real& mid, const Real& rad) {
  require(rad.sign() >= 0, ErrorKind::domain, "negative radius");
  const auto bits = std::max(mid.precision(), rad.precision());
  return CertifiedReal(apply(mpfr_sub, mid, rad, MPFR_RNDD, bits),
                       apply(mpfr_add, mid, rad, MPFR_RNDU, bits));
}

CertifiedReal CertifiedReal::hull(const CertifiedReal& a, const CertifiedReal& b) {
  return CertifiedReal(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

CertifiedReal CertifiedReal::pi(mpfr_prec_t bits) { return constant(mpfr_const_pi, bits); }
CertifiedReal CertifiedReal::euler_gamma(mpfr_prec_t bits) {
  return constant(mpfr_const_euler, bits);
}
CertifiedReal CertifiedReal::log2(mpfr_prec_t bits) { return constant(mpfr_const_log2, bits); }

CertifiedReal CertifiedReal::log_of(unsigned long n, mpfr_prec_t bits) {
  require(n > 0, ErrorKind::domain, "log of zero");
  Real lo(bits), hi(bits);
  mpfr_log_ui(lo.get(), n, MPFR_RNDD);
  mpfr_log_ui(hi.get(), n, MPFR_RNDU);
  return CertifiedReal(lo, hi);
}

Real CertifiedReal::mid() const {
  Real out(precision() + 1);
  mpfr_add(out.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

Real CertifiedReal::rad() const {
  const Real m = mid();
  const auto bits = m.precision();
  return max(apply(mpfr_sub, hi_, m, MPFR_RNDU, bits), apply(mpfr_sub, m, lo_, MPFR_RNDU, bits));
}

Real CertifiedReal::width() const {
  return apply(mpfr_sub, hi_, lo_, MPFR_RNDU, precision());
}

bool CertifiedReal::contains(double x) const {
  return mpfr_cmp_d(lo_.get(), x) <= 0 && mpfr_cmp_d(hi_.get(), x) >= 0;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& rhs) {
  const auto bits = joint(*this, rhs);
  *this = CertifiedReal(apply(mpfr_add, lo_, rhs.lo_, MPFR_RNDD, bits),
                        apply(mpfr_add, hi_, rhs.hi_, MPFR_RNDU, bits));
  return *this;
}

CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& rhs) {
  const auto bits = joint(*this, rhs);
  *this = CertifiedReal(apply(mpfr_sub, lo_, rhs.hi_, MPFR_RNDD, bits),
                        apply(mpfr_sub, hi_, rhs.lo_, MPFR_RNDU, bits));
  return *this;
}

namespace {

// Min (rounded down) and max (rounded up) of op over the four endpoint pairs.
CertifiedReal corners(BinaryOp op, const CertifiedReal& a, const CertifiedReal& b) {
  const auto bits = std::max(a.precision(), b.precision());
  const Real* xs[2] = {&a.lower(), &a.upper()};
  const Real* ys[2] = {&b.lower(), &b.upper()};
  Real lo = apply(op, *xs[0], *ys[0], MPFR_RNDD, bits);
  Real hi = apply(op, *xs[0], *ys[0], MPFR_RNDU, bits);
  for (const Real* x : xs) {
    for (const Real* y : ys) {
      lo = min(lo, apply(op, *x, *y, MPFR_RNDD, bits));
      hi = max(hi, apply(op, *x, *y, MPFR_RNDU, bits));
    }
  }
  return CertifiedReal(lo, hi);
}

}  // namespace

CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& rhs) {
  *this = corners(mpfr_mul, *this, rhs);
  return *this;
}

CertifiedReal& CertifiedReal::operator/=(const CertifiedReal& rhs) {
  require(!rhs.contains_zero(), ErrorKind::domain, "division by an interval containing zero");
  *this = corners(mpfr_div, *this, rhs);
  return *this;
}

CertifiedReal CertifiedReal::operator-() const { return CertifiedReal(-hi_, -lo_); }

CertifiedReal CertifiedReal::ldexp(long k) const {
  CertifiedReal out(*this);
  mpfr_mul_2si(out.lo_.get(), out.lo_.get(), k, MPFR_RNDD);
  mpfr_mul_2si(out.hi_.get(), out.hi_.get(), k, MPFR_RNDU);
  return out;
}

CertifiedReal CertifiedReal::inflated(const Real& amount) const {
  const auto bits = std::max(precision(), amount.precision());
  return CertifiedReal(apply(mpfr_sub, lo_, amount, MPFR_RNDD, bits),
                       apply(mpfr_add, hi_, amount, MPFR_RNDU, bits));
}

CertifiedReal CertifiedReal::intersect(const CertifiedReal& other) const {
  require(overlaps(other), ErrorKind::domain, "disjoint enclosures");
  return CertifiedReal(max(lo_, other.lo_), min(hi_, other.hi_));
}

std::string CertifiedReal::to_string(int digits) const {
  return mid().to_string(digits) + " +/- " + rad().to_string(3, MPFR_RNDU);
}

CertifiedReal sqr(const CertifiedReal& x) {
  const auto bits = x.precision();
  const CertifiedReal a = abs(x);
  return CertifiedReal(apply(mpfr_sqr, a.lower(), MPFR_RNDD, bits),
                       apply(mpfr_sqr, a.upper(), MPFR_RNDU, bits));
}

CertifiedReal pown(const CertifiedReal& x, unsigned n) {
  const auto bits = x.precision();
  auto power = [bits](const Real& v, unsigned e, mpfr_rnd_t rnd) {
    Real out(bits);
    mpfr_pow_ui(out.get(), v.get(), e, rnd);
    return out;
  };
  if (n == 0) return CertifiedReal(1.0, bits);
  if (n % 2 == 1) return CertifiedReal(power(x.lower(), n, MPFR_RNDD), power(x.upper(), n, MPFR_RNDU));
  const CertifiedReal a = abs(x);
  return CertifiedReal(power(a.lower(), n, MPFR_RNDD), power(a.upper(), n, MPFR_RNDU));
}

CertifiedReal abs(const CertifiedReal& x) {
  if (x.lower().sign() >= 0) return x;
  if (x.upper().sign() <= 0) return -x;
  return CertifiedReal(Real(x.precision()), max(-x.lower(), x.upper()));
}

CertifiedReal sqrt(const CertifiedReal& x) {
  require(x.lower().sign() >= 0, ErrorKind::domain, "sqrt of a possibly negative value");
  return monotone(mpfr_sqrt, x);
}

CertifiedReal exp(const CertifiedReal& x) { return monotone(mpfr_exp, x); }

CertifiedReal log(const CertifiedReal& x) {
  require(x.certainly_positive(), ErrorKind::domain, "log of a possibly nonpositive value");
  return monotone(mpfr_log, x);
}

CertifiedReal log1p(const CertifiedReal& x) {
  require(mpfr_cmp_si(x.lower().get(), -1) > 0, ErrorKind::domain, "log1p argument <= -1");
  return monotone(mpfr_log1p, x);
}

CertifiedReal pow(const CertifiedReal& x, const CertifiedReal& y) {
  return exp(y * log(x));
}

namespace {

// Enclosure of a 1-Lipschitz bounded trig function: value at the midpoint
// widened by the radius, clipped to [-1, 1].
CertifiedReal lipschitz_trig(UnaryOp op, const CertifiedReal& x) {
  const auto bits = x.precision();
  const Real m = x.mid();
  Real lo = apply(op, m, MPFR_RNDD, bits);
  Real hi = apply(op, m, MPFR_RNDU, bits);
  CertifiedReal out = CertifiedReal(lo, hi).inflated(x.rad());
  const Real one(1L, bits);
  return CertifiedReal(max(out.lower(), -one), min(out.upper(), one));
}

}  // namespace

CertifiedReal cos(const CertifiedReal& x) { return lipschitz_trig(mpfr_cos, x); }
CertifiedReal sin(const CertifiedReal& x) { return lipschitz_trig(mpfr_sin, x); }

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
  return CertifiedReal(max(a.lower(), b.lower()), max(a.upper(), b.upper()));
}

CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b) {
  return CertifiedReal(min(a.lower(), b.lower()), min(a.upper(), b.upper()));
}

CertifiedComplex& CertifiedComplex::operator+=(const CertifiedComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

CertifiedComplex& CertifiedComplex::operator-=(const CertifiedComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

CertifiedComplex& CertifiedComplex::operator*=(const CertifiedComplex& rhs) {
  CertifiedReal r = re * rhs.re - im * rhs.im;
  CertifiedReal i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

CertifiedComplex& CertifiedComplex::operator*=(const CertifiedReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

CertifiedComplex& CertifiedComplex::operator/=(const CertifiedComplex& rhs) {
  const CertifiedReal n = norm(rhs);
  *this *= rhs.conj();
  re /= n;
  im /= n;
  return *this;
}

CertifiedReal norm(const CertifiedComplex& z) { return sqr(z.re) + sqr(z.im); }
CertifiedReal abs(const CertifiedComplex& z) { return sqrt(norm(z)); }

CertifiedComplex pow_neg(const CertifiedReal& log_n, const CertifiedComplex& s) {
  const CertifiedReal mag = exp(-(s.re * log_n));
  const CertifiedReal phase = s.im * log_n;
  return {mag * cos(phase), -(mag * sin(phase))};
}

}  // namespace ezeta
