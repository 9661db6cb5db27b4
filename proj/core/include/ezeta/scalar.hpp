#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "ezeta/bernoulli.hpp"
#include "ezeta/certified.hpp"
#include "ezeta/param.hpp"
#include "ezeta/precision.hpp"
#include "ezeta/real.hpp"

namespace ezeta {

// Double overloads so bound kernels can be written once against any scalar.
inline double log(double x) { return std::log(x); }
inline double log1p(double x) { return std::log1p(x); }
inline double exp(double x) { return std::exp(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double pow(double x, double y) { return std::pow(x, y); }
inline double abs(double x) { return std::fabs(x); }
inline double max(double a, double b) { return a < b ? b : a; }
inline double min(double a, double b) { return b < a ? b : a; }

/// Literal and constant factory for one scalar type.
///
/// double: fast exploration. Real: nearest-rounded multiprecision.
/// CertifiedReal: outward-rounded enclosures.
template <class T>
struct Field;

template <>
struct Field<double> {
  using value_type = double;
  static constexpr bool certified = false;

  double num(double x) const { return x; }
  double num(const Rational& q) const { return q.get_d(); }
  double lit(std::string_view text) const {
    const std::string s(text);
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      return std::strtod(s.substr(0, slash).c_str(), nullptr) /
             std::strtod(s.substr(slash + 1).c_str(), nullptr);
    }
    return std::strtod(s.c_str(), nullptr);
  }
  double pi() const { return 3.141592653589793; }
  double euler_gamma() const { return 0.5772156649015329; }
  double log2() const { return 0.6931471805599453; }

  static double lower(double x) { return x; }
  static double upper(double x) { return x; }
  static double mid(double x) { return x; }
  static bool certainly_le(double a, double b) { return a <= b; }
  static bool certainly_gt(double a, double b) { return a > b; }
  static double hull(double a, double b) { return max(a, b); }
};

template <>
struct Field<Real> {
  using value_type = Real;
  static constexpr bool certified = false;
  mpfr_prec_t bits;
  int digits;

  explicit Field(const PrecisionContext& ctx) : bits(ctx.bits()), digits(ctx.working_digits()) {}

  Real num(double x) const { return Real(x, bits); }
  Real num(const Rational& q) const {
    Real out(bits);
    mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDN);
    return out;
  }
  Real lit(std::string_view text) const { return Real::parse(text, bits); }
  Real pi() const { return CertifiedReal::pi(bits).mid(); }
  Real euler_gamma() const { return CertifiedReal::euler_gamma(bits).mid(); }
  Real log2() const { return CertifiedReal::log2(bits).mid(); }

  static double lower(const Real& x) { return x.to_double(MPFR_RNDD); }
  static double upper(const Real& x) { return x.to_double(MPFR_RNDU); }
  static double mid(const Real& x) { return x.to_double(); }
  static bool certainly_le(const Real& a, const Real& b) { return a <= b; }
  static bool certainly_gt(const Real& a, const Real& b) { return a > b; }
  static Real hull(const Real& a, const Real& b) { return max(a, b); }
};

template <>
struct Field<CertifiedReal> {
  using value_type = CertifiedReal;
  static constexpr bool certified = true;
  mpfr_prec_t bits;
  int digits;

  explicit Field(const PrecisionContext& ctx) : bits(ctx.bits()), digits(ctx.working_digits()) {}

  CertifiedReal num(double x) const { return CertifiedReal(x, bits); }
  CertifiedReal num(const Rational& q) const { return enclose(q, bits); }
  CertifiedReal lit(std::string_view text) const { return CertifiedReal::parse(text, bits); }
  CertifiedReal pi() const { return CertifiedReal::pi(bits); }
  CertifiedReal euler_gamma() const { return CertifiedReal::euler_gamma(bits); }
  CertifiedReal log2() const { return CertifiedReal::log2(bits); }

  static double lower(const CertifiedReal& x) { return x.lower_double(); }
  static double upper(const CertifiedReal& x) { return x.upper_double(); }
  static double mid(const CertifiedReal& x) { return x.mid_double(); }
  static bool certainly_le(const CertifiedReal& a, const CertifiedReal& b) {
    return a.upper() <= b.lower();
  }
  static bool certainly_gt(const CertifiedReal& a, const CertifiedReal& b) {
    return a.lower() > b.upper();
  }
  /// Enclosure of a value known to equal one of a or b.
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b) {
    return CertifiedReal::hull(a, b);
  }
};

}  // namespace ezeta
