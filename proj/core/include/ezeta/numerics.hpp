#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/certified.hpp"
#include "ezeta/precision.hpp"

namespace ezeta {

/// One stored Laurent-Stieltjes constant: the true value lies in mid +/- rad.
struct StieltjesRecord {
  int n = 0;
  std::string mid;
  std::string rad;
};

/// Enclosures of gamma_0 .. gamma_{n_max}, as read from the `n mid rad` text
/// format. Indices must be contiguous from 0.
class StieltjesTable {
 public:
  /// The table compiled into the library.
  static const StieltjesTable& shipped();
  static StieltjesTable parse(std::string_view text);
  static StieltjesTable load(const std::filesystem::path& path);
  static StieltjesTable from_records(std::vector<StieltjesRecord> records);

  std::string serialize() const;
  int n_max() const { return static_cast<int>(records_.size()) - 1; }
  const std::vector<StieltjesRecord>& records() const { return records_; }
  const StieltjesRecord& record(int n) const;
  /// Enclosure of gamma_n at `bits`, including the stored radius.
  CertifiedReal enclosure(int n, mpfr_prec_t bits) const;

 private:
  std::vector<StieltjesRecord> records_;
};

/// gamma_n with radius at most 10^-(working_digits - 10).
CertifiedReal stieltjes_constant(int n, const PrecisionContext& ctx);
CertifiedReal stieltjes_constant(int n, const PrecisionContext& ctx, const StieltjesTable& table);

/// Lavrik's bound n!/2^{n+1} on |gamma_n|, as an enclosure.
CertifiedReal lavrik_bound(int n, mpfr_prec_t bits);

/// Computes gamma_0..gamma_{n_max} by Euler-Maclaurin summation of
/// (log k)^n / k from k = N on, with `order` Bernoulli corrections.
std::vector<CertifiedReal> compute_stieltjes(int n_max, mpfr_prec_t bits,
                                             unsigned long N = 1000, unsigned order = 60);

/// Rounds an enclosure to a decimal record with `digits` significant digits;
/// the radius absorbs the conversion error.
StieltjesRecord to_record(int n, const CertifiedReal& value, int digits);

CertifiedReal euler_gamma(const PrecisionContext& ctx);

/// zeta(sigma) for real sigma > 1.
CertifiedReal zeta_real(const CertifiedReal& sigma, const PrecisionContext& ctx);
CertifiedReal zeta_real(double sigma, const PrecisionContext& ctx);
/// Binary64 approximation of zeta(sigma), sigma > 1; relative error ~1e-15.
double zeta_real_approx(double sigma);

}  // namespace ezeta
