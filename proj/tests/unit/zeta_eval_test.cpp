#include <cmath>
#include <complex>

#include "doctest.h"
#include "ezeta/error.hpp"
#include "ezeta/zeta_eval.hpp"
#include "support.hpp"

using namespace ezeta;
using ezeta::test::ctx60;
using ezeta::test::encloses;

namespace {

struct Expected {
  double sigma;
  double t;
  const char* re;
  const char* im;
};

constexpr Expected kZetaValues[] = {
    {0.5, 3, "0.532736670974232883923384121681", "-0.078896513425833382656205086906"},
    {0.5, 14, "0.022241142609993589246213199204", "-0.103258123266450057902363095553"},
    {2, 10, "1.19798250067418460759991676138", "-0.0791704917205257472733225732073"},
    {1, 100, "1.63283350668671186661070504947", "-0.0681312038418124901012054821411"},
    {0.75, 0.5, "-0.240141052953600048252405513074", "-1.56236075061446328339627271436"},
};

}  // namespace

TEST_SUITE("zeta_eval") {
  TEST_CASE("zeta at real points") {
    CHECK(encloses(em_zeta({2, 0}, ctx60()).re, "1.64493406684822643647241516665"));
    CHECK(em_zeta({2, 0}, ctx60()).im.contains(0.0));
    CHECK(encloses(em_zeta({0.5, 0}, ctx60()).re, "-1.46035450880958681288949915252"));
  }

  TEST_CASE("zeta at complex points") {
    for (const auto& e : kZetaValues) {
      CAPTURE(e.sigma);
      CAPTURE(e.t);
      const CertifiedComplex z = em_zeta({e.sigma, e.t}, ctx60());
      CHECK(encloses(z.re, e.re));
      CHECK(encloses(z.im, e.im));
    }
  }

  TEST_CASE("conjugate symmetry") {
    const CertifiedComplex up = em_zeta({0.5, 3}, ctx60());
    const CertifiedComplex down = em_zeta({0.5, -3}, ctx60());
    CHECK(up.re.overlaps(down.re));
    CHECK(up.im.overlaps(-down.im));
  }

  TEST_CASE("derivative") {
    CHECK(encloses(em_zeta_deriv({2, 0}, ctx60()).re, "-0.937548254315843753702574094568"));
    CHECK(encloses(em_zeta_deriv({3, 0}, ctx60()).re, "-0.198126242885636853330681821503"));
    const CertifiedComplex d = em_zeta_deriv({0.5, 20}, ctx60());
    CHECK(encloses(d.re, "0.7145067908437759923766753826"));
    CHECK(encloses(d.im, "1.00524088394701315547272407661"));
  }

  TEST_CASE("explicit order and truncation") {
    EMOptions classical;
    classical.order = 1;
    classical.N = 2000;
    const EMResult r = em_zeta_enclosure(
        {CertifiedReal(2.0, ctx60().bits()), CertifiedReal(0.0, ctx60().bits())}, ctx60(),
        classical);
    CHECK(r.order == 1);
    CHECK(r.N == 2000);
    CHECK(r.tail > 0);
    CHECK(r.value.re.overlaps(ezeta::test::reference("1.64493406684822643647241516665", 200)));
  }

  TEST_CASE("rectangle inputs give enclosures of the whole rectangle") {
    const auto bits = ctx60().bits();
    const CertifiedComplex s{CertifiedReal(Real(1.99, bits), Real(2.01, bits)),
                             CertifiedReal(0.0, bits)};
    const CertifiedComplex z = em_zeta_enclosure(s, ctx60()).value;
    CHECK(z.re.contains(em_zeta({1.99, 0}, ctx60()).re));
    CHECK(z.re.contains(em_zeta({2.01, 0}, ctx60()).re));
  }

  TEST_CASE("domain and pole") {
    try {
      static_cast<void>(em_zeta({1, 0}, ctx60()));
      FAIL("expected a pole error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::pole);
    }
    try {
      static_cast<void>(em_zeta({-0.5, 1}, ctx60()));
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::domain);
    }
    CHECK_NOTHROW(static_cast<void>(em_zeta({1, 1e-3}, ctx60())));
  }

  TEST_CASE("certified supremum on a short segment") {
    SupOptions opts;
    opts.claimed_bound = 1.461;
    const SupResult r = sup_modulus_on_segment(0.5, 0, 1, PrecisionContext(30), opts);
    CHECK(r.certified);
    CHECK(r.below_claim);
    CHECK(r.value.upper_double() <= 1.461);
    CHECK(r.value.lower_double() >= 1.4603);
  }

  TEST_CASE("grid maximum of the reciprocal") {
    const GridResult g =
        grid_max_on_segment(1, 2, 4, 0.5, SupTarget::reciprocal, true, PrecisionContext(30));
    CHECK(g.nodes == 5);
    CHECK(g.max.certainly_positive());
    CHECK(g.max.upper_double() < 2.079);
  }
}
