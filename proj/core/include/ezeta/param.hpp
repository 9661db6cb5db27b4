#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ezeta {

/// Bound parameters are exact rationals, so certified evaluation is exact in
/// its inputs: six-decimal table values, 2/3, and 1/W0 are all representable.
using Rational = mpq_class;

/// Parses "0.777942", "-1.5e-3", "3.000175332800e12", "2/3", integers, and
/// the named values W0, 1/W0, H0, H (= H0 - 1/2). Irrational names "e^e" and
/// "2exp(e^2)" become the smallest binary64 value not below them.
Rational parse_rational(std::string_view text);

Rational rational_from_double(double x);

/// Decimal rendering with `digits` significant digits.
std::string format_rational(const Rational& q, int digits = 10);

}  // namespace ezeta
