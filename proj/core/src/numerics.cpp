#include "ezeta/numerics.hpp"

#include <gmpxx.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "em_plan.hpp"
#include "embedded_data.hpp"
#include "ezeta/bernoulli.hpp"
#include "ezeta/error.hpp"

namespace ezeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

CertifiedReal signed_bernoulli_coefficient(unsigned two_k, mpfr_prec_t bits) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), two_k);
  return enclose(mpq_class(bernoulli(two_k) / mpq_class(fact)), bits);
}

}  // namespace

StieltjesTable StieltjesTable::from_records(std::vector<StieltjesRecord> records) {
  StieltjesTable table;
  for (std::size_t i = 0; i < records.size(); ++i) {
    require(records[i].n == static_cast<int>(i), ErrorKind::fixture,
            "Stieltjes records must be contiguous from n = 0");
    Real::parse(records[i].mid, 64);
    require(Real::parse(records[i].rad, 64).sign() >= 0, ErrorKind::fixture,
            "negative Stieltjes radius");
  }
  require(!records.empty(), ErrorKind::fixture, "empty Stieltjes table");
  table.records_ = std::move(records);
  return table;
}

StieltjesTable StieltjesTable::parse(std::string_view text) {
  std::vector<StieltjesRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    StieltjesRecord rec;
    if (!(fields >> rec.n >> rec.mid >> rec.rad)) {
      raise(ErrorKind::fixture, "malformed Stieltjes record: '" + line + "'");
    }
    records.push_back(std::move(rec));
  }
  return from_records(std::move(records));
}

StieltjesTable StieltjesTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::fixture, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const StieltjesTable& StieltjesTable::shipped() {
  static const StieltjesTable table = parse(detail::embedded_stieltjes());
  return table;
}

std::string StieltjesTable::serialize() const {
  std::string out = "# n mid rad\n";
  for (const auto& r : records_) {
    out += std::to_string(r.n) + " " + r.mid + " " + r.rad + "\n";
  }
  return out;
}

const StieltjesRecord& StieltjesTable::record(int n) const {
  require(n >= 0 && n <= n_max(), ErrorKind::index_out_of_range,
          "Stieltjes index " + std::to_string(n) + " outside [0, " + std::to_string(n_max()) + "]");
  return records_[static_cast<std::size_t>(n)];
}

CertifiedReal StieltjesTable::enclosure(int n, mpfr_prec_t bits) const {
  const auto& r = record(n);
  return CertifiedReal::parse(r.mid, bits).inflated(Real::parse(r.rad, bits, MPFR_RNDU));
}

CertifiedReal stieltjes_constant(int n, const PrecisionContext& ctx) {
  return stieltjes_constant(n, ctx, StieltjesTable::shipped());
}

CertifiedReal stieltjes_constant(int n, const PrecisionContext& ctx, const StieltjesTable& table) {
  CertifiedReal value = table.enclosure(n, ctx.bits());
  const double allowed = -(ctx.working_digits() - 10) * kLn10;
  const Real rad = value.rad();
  require(rad.is_zero() || std::log(rad.to_double(MPFR_RNDU)) <= allowed,
          ErrorKind::precision_unreachable,
          "stored radius of gamma_" + std::to_string(n) + " exceeds 1e-" +
              std::to_string(ctx.working_digits() - 10));
  return value;
}

CertifiedReal lavrik_bound(int n, mpfr_prec_t bits) {
  require(n >= 0, ErrorKind::domain, "negative Stieltjes index");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return enclose(fact, bits).ldexp(-(n + 1));
}

std::vector<CertifiedReal> compute_stieltjes(int n_max, mpfr_prec_t bits, unsigned long N,
                                             unsigned order) {
  require(n_max >= 0 && N >= 2 && order >= 1, ErrorKind::domain, "bad Stieltjes parameters");
  const CertifiedReal one(1.0, bits);
  const CertifiedReal log_N = CertifiedReal::log_of(N, bits);
  const CertifiedReal big_N(static_cast<double>(N), bits);
  const CertifiedReal inv_N = one / big_N;
  const CertifiedReal inv_N2 = sqr(inv_N);

  std::vector<CertifiedReal> logs;
  std::vector<CertifiedReal> weighted;  // (log k)^n / k, advanced in n
  for (unsigned long k = 1; k < N; ++k) {
    logs.push_back(CertifiedReal::log_of(k, bits));
    weighted.push_back(one / CertifiedReal(static_cast<double>(k), bits));
  }

  std::vector<CertifiedReal> coeffs;
  for (unsigned j = 1; j <= order; ++j) coeffs.push_back(signed_bernoulli_coefficient(2 * j, bits));
  const CertifiedReal tail_coeff = abs(coeffs.back());

  std::vector<CertifiedReal> out;
  for (int n = 0; n <= n_max; ++n) {
    CertifiedReal sum(bits);
    for (std::size_t i = 0; i < weighted.size(); ++i) {
      if (n > 0) weighted[i] *= logs[i];
      sum += weighted[i];
    }
    const CertifiedReal log_pow = pown(log_N, static_cast<unsigned>(n));
    sum += log_pow * inv_N.ldexp(-1);
    sum -= log_pow * log_N / CertifiedReal(static_cast<double>(n + 1), bits);

    // f^{(q)}(x) = x^{-1-q} P_q(log x), P_0 = L^n, P_{q+1} = P_q' - (q+1) P_q.
    std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1);
    poly[static_cast<std::size_t>(n)] = 1;
    auto advance = [&poly](unsigned q) {
      std::vector<mpz_class> next(poly.size());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] -= mpz_class(q + 1) * poly[i];
        if (i > 0) next[i - 1] += mpz_class(static_cast<unsigned long>(i)) * poly[i];
      }
      poly.swap(next);
    };
    auto evaluate = [&](const std::vector<mpz_class>& p) {
      CertifiedReal acc(bits);
      for (std::size_t i = p.size(); i-- > 0;) acc = acc * log_N + enclose(p[i], bits);
      return acc;
    };
    CertifiedReal x_pow = inv_N2;  // N^{-1-q} for q = 1
    unsigned q = 0;
    for (unsigned j = 1; j <= order; ++j) {
      while (q < 2 * j - 1) advance(q++);
      sum -= coeffs[j - 1] * x_pow * evaluate(poly);
      x_pow *= inv_N2;
    }
    while (q < 2 * order) advance(q++);

    // Tail: |B_2m|/(2m)! * sum_i |c_i| * int_N^inf x^{-1-2m} (log x)^i dx.
    const CertifiedReal a(static_cast<double>(2 * order), bits);
    const CertifiedReal N_pow = exp(-(a * log_N));
    CertifiedReal tail(bits);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      CertifiedReal integral(bits);
      CertifiedReal falling = one;  // i!/(i-r)!
      CertifiedReal a_pow = a;      // a^{r+1}
      for (std::size_t r = 0; r <= i; ++r) {
        integral += falling * pown(log_N, static_cast<unsigned>(i - r)) / a_pow;
        falling *= CertifiedReal(static_cast<double>(i - r), bits);
        a_pow *= a;
      }
      tail += enclose(mpz_class(abs(poly[i])), bits) * integral;
    }
    tail = tail_coeff * N_pow * tail;
    out.push_back(sum.inflated(tail.upper()));
  }
  return out;
}

StieltjesRecord to_record(int n, const CertifiedReal& value, int digits) {
  const auto bits = value.precision();
  StieltjesRecord rec;
  rec.n = n;
  rec.mid = value.mid().to_string(digits);
  const CertifiedReal printed = CertifiedReal::parse(rec.mid, bits);
  Real up(bits), down(bits);
  mpfr_sub(up.get(), value.upper().get(), printed.lower().get(), MPFR_RNDU);
  mpfr_sub(down.get(), printed.upper().get(), value.lower().get(), MPFR_RNDU);
  const Real rad = max(up, down);
  rec.rad = rad.to_string(3, MPFR_RNDU);
  return rec;
}

CertifiedReal euler_gamma(const PrecisionContext& ctx) { return CertifiedReal::euler_gamma(ctx.bits()); }

CertifiedReal zeta_real(const CertifiedReal& sigma, const PrecisionContext& ctx) {
  require(sigma.lower() > Real(1L, 64), ErrorKind::domain, "zeta_real needs sigma > 1");
  const auto bits = ctx.bits();
  const double log_target = -(ctx.working_digits() / 2.0) * kLn10;
  detail::EmPlan plan = detail::plan_em(sigma.lower_double(), 0.0, log_target - std::log(4.0), 2,
                                        1000000, 0, false);
  const CertifiedReal one(1.0, bits);
  for (int attempt = 0;; ++attempt) {
    CertifiedReal sum = one;
    for (unsigned long n = 2; n < plan.N; ++n) sum += exp(-(sigma * CertifiedReal::log_of(n, bits)));
    const CertifiedReal big_N(static_cast<double>(plan.N), bits);
    const CertifiedReal N_pow = exp(-(sigma * CertifiedReal::log_of(plan.N, bits)));  // N^{-sigma}
    sum += big_N * N_pow / (sigma - one);
    sum += N_pow.ldexp(-1);
    const CertifiedReal inv_N2 = one / sqr(big_N);
    CertifiedReal rising = sigma;       // (sigma)_{2k-1}
    CertifiedReal x_pow = N_pow / big_N;  // N^{-sigma-2k+1}
    for (unsigned k = 1; k <= plan.order; ++k) {
      sum += signed_bernoulli_coefficient(2 * k, bits) * rising * x_pow;
      if (k < plan.order) {
        rising *= (sigma + CertifiedReal(2.0 * k - 1, bits)) * (sigma + CertifiedReal(2.0 * k, bits));
        x_pow *= inv_N2;
      }
    }
    const CertifiedReal a = sigma + CertifiedReal(2.0 * plan.order - 1, bits);
    const CertifiedReal tail = rising * a * enclose(bernoulli_over_factorial(2 * plan.order), bits) *
                               x_pow / a;
    const double tail_hi = tail.upper_double();
    if (std::log(tail_hi) <= log_target || attempt >= 4) return sum.inflated(tail.upper());
    plan.N += plan.N / 4 + 1;
  }
}

CertifiedReal zeta_real(double sigma, const PrecisionContext& ctx) {
  require(sigma > 1, ErrorKind::domain, "zeta_real needs sigma > 1");
  return zeta_real(CertifiedReal(sigma, ctx.bits()), ctx);
}

double zeta_real_approx(double sigma) {
  require(sigma > 1, ErrorKind::domain, "zeta_real needs sigma > 1");
  constexpr int N = 12;
  static constexpr double kB2kOverFact[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
                                            1.0 / 47900160, -691.0 / 1307674368000.0};
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(n, -sigma);
  const double n_pow = std::pow(N, -sigma);
  sum += N * n_pow / (sigma - 1) + n_pow / 2;
  double rising = sigma;
  double x_pow = n_pow / N;
  for (int k = 1; k <= 6; ++k) {
    sum += kB2kOverFact[k - 1] * rising * x_pow;
    rising *= (sigma + 2 * k - 1) * (sigma + 2 * k);
    x_pow /= double(N) * N;
  }
  return sum;
}

}  // namespace ezeta
