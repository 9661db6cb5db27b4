#include "ezeta/param.hpp"

#include <cctype>
#include <cmath>

#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"

namespace ezeta {

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

mpz_class pow10(unsigned long k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
  return out;
}

Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  require(seen_digit, ErrorKind::usage, "not a number: '" + s + "'");
  if (i < s.size()) {
    require(s[i] == 'e' || s[i] == 'E', ErrorKind::usage, "not a number: '" + s + "'");
    const std::string exponent = s.substr(i + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(!exponent.empty() && used == exponent.size(), ErrorKind::usage,
            "bad exponent in '" + s + "'");
    require(std::labs(e) < 100000, ErrorKind::usage, "exponent out of range in '" + s + "'");
    scale += e;
  }
  Rational q{mpz_class(digits, 10)};
  if (scale > 0) q *= pow10(static_cast<unsigned long>(scale));
  if (scale < 0) q /= pow10(static_cast<unsigned long>(-scale));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational rational_from_double(double x) {
  require(std::isfinite(x), ErrorKind::domain, "non-finite parameter");
  Rational q(x);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  require(!s.empty(), ErrorKind::usage, "empty number");
  if (s == "W0") return parse_decimal(std::string(literal::zero_free_W0));
  if (s == "1/W0") {
    Rational q = 1 / parse_decimal(std::string(literal::zero_free_W0));
    q.canonicalize();
    return q;
  }
  if (s == "H0") return parse_decimal(std::string(literal::riemann_height));
  if (s == "H") {
    Rational q = parse_decimal(std::string(literal::riemann_height)) - Rational(1, 2);
    q.canonicalize();
    return q;
  }
  if (s == "e^e") return rational_from_double(approx::e_to_e_ceil());
  if (s == "2exp(e^2)") return rational_from_double(approx::two_exp_e_squared_ceil());
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const Rational den = parse_decimal(trim(s.substr(slash + 1)));
    require(den != 0, ErrorKind::usage, "zero denominator in '" + s + "'");
    Rational q = parse_decimal(trim(s.substr(0, slash))) / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

std::string format_rational(const Rational& q, int digits) {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  char* raw = nullptr;
  mpfr_asprintf(&raw, ("%." + std::to_string(digits) + "Rg").c_str(), x);
  std::string out(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);
  return out;
}

}  // namespace ezeta
