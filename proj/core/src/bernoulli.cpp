#include "ezeta/bernoulli.hpp"

#include <deque>
#include <mutex>

namespace ezeta {

namespace {

std::mutex cache_mutex;
std::deque<mpq_class> cache{mpq_class(1)};

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

const mpq_class& bernoulli(unsigned n) {
  std::lock_guard lock(cache_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (cache.size() <= n) {
    const auto m = static_cast<unsigned>(cache.size());
    mpq_class acc(0);
    for (unsigned k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      acc += mpq_class(binomial(m + 1, k)) * cache[k];
    }
    mpq_class next = -acc / mpq_class(m + 1);
    next.canonicalize();
    cache.push_back(next);
  }
  return cache[n];
}

mpq_class bernoulli_over_factorial(unsigned two_k) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), two_k);
  mpq_class out = abs(bernoulli(two_k)) / mpq_class(fact);
  out.canonicalize();
  return out;
}

CertifiedReal enclose(const mpq_class& q, mpfr_prec_t bits) {
  Real lo(bits), hi(bits);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return CertifiedReal(lo, hi);
}

CertifiedReal enclose(const mpz_class& z, mpfr_prec_t bits) {
  Real lo(bits), hi(bits);
  mpfr_set_z(lo.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), z.get_mpz_t(), MPFR_RNDU);
  return CertifiedReal(lo, hi);
}

}  // namespace ezeta
