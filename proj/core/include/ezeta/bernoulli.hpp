#pragma once

#include <gmpxx.h>

#include "ezeta/certified.hpp"

namespace ezeta {

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached; safe to call concurrently.
const mpq_class& bernoulli(unsigned n);

/// |B_{2k}| / (2k)! as an exact rational.
mpq_class bernoulli_over_factorial(unsigned two_k);

/// Outward enclosures of exact rationals and integers.
CertifiedReal enclose(const mpq_class& q, mpfr_prec_t bits);
CertifiedReal enclose(const mpz_class& z, mpfr_prec_t bits);

}  // namespace ezeta
