#pragma once

#include <string_view>

#include "ezeta/certified.hpp"
#include "ezeta/precision.hpp"

namespace ezeta {

/// Cited numerical inputs, as exact decimal strings.
namespace literal {
inline constexpr std::string_view zero_free_W0 = "5.558691";
inline constexpr std::string_view riemann_height = "3.000175332800e12";
inline constexpr std::string_view half_line_coefficient = "0.618";
inline constexpr std::string_view half_line_shift = "1.31";
inline constexpr std::string_view one_line_two_thirds = "58.096";
inline constexpr std::string_view small_t_half_line = "1.461";
inline constexpr std::string_view small_t_reciprocal = "2.079";
inline constexpr std::string_view large_t_logderiv = "0.639";
inline constexpr std::string_view logderiv_on_one_line = "24.303";
inline constexpr std::string_view logderiv_real_floor = "0.852";
}  // namespace literal

/// Binary64 views of the cited inputs for exploration code.
namespace approx {
inline constexpr double W0 = 5.558691;
inline constexpr double H0 = 3.000175332800e12;
/// H0 - 1/2, exact in binary64.
inline constexpr double H = 3000175332799.5;
/// Largest double not exceeding 1/W0.
double inverse_W0_floor();
/// Smallest double not below e^e.
double e_to_e_ceil();
/// Smallest double not below 2 exp(e^2).
double two_exp_e_squared_ceil();
}  // namespace approx

/// The cited inputs as enclosures at a given precision.
struct Constants {
  CertifiedReal W0;
  CertifiedReal H0;
  CertifiedReal H;
  CertifiedReal euler_gamma;
  CertifiedReal half_line_coefficient;
  CertifiedReal one_line_23;
  CertifiedReal small_t_half_line;
  CertifiedReal small_t_reciprocal;
  CertifiedReal large_t_logderiv;

  static Constants at(const PrecisionContext& ctx);
};

}  // namespace ezeta
