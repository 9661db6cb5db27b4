#include <cmath>
#include <string>

#include "doctest.h"
#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"
#include "ezeta/numerics.hpp"
#include "ezeta/param.hpp"
#include "support.hpp"

using namespace ezeta;
using ezeta::test::ctx60;
using ezeta::test::encloses;

TEST_SUITE("numerics") {
  TEST_CASE("directed rounding keeps exact results inside") {
    const mpfr_prec_t bits = 80;
    const CertifiedReal third = CertifiedReal(1.0, bits) / CertifiedReal(3.0, bits);
    CHECK((third * CertifiedReal(3.0, bits)).contains(1.0));
    CHECK(third.lower() < third.upper());

    const CertifiedReal two(2.0, bits);
    CHECK(sqr(sqrt(two)).contains(2.0));
    CHECK(exp(log(CertifiedReal(7.0, bits))).contains(7.0));
    CHECK((sqr(sin(two)) + sqr(cos(two))).contains(1.0));
    CHECK(pow(CertifiedReal(8.0, bits), CertifiedReal::parse("1/3", bits)).contains(2.0));
  }

  TEST_CASE("decimal parsing encloses non-dyadic values") {
    const CertifiedReal x = CertifiedReal::parse("0.1", 64);
    CHECK(x.lower() < x.upper());
    CHECK((x * CertifiedReal(10.0, 64)).contains(1.0));
    CHECK(CertifiedReal::parse("0.5", 64).width().is_zero());
  }

  TEST_CASE("interval helpers") {
    const CertifiedReal a(Real(1.0, 64), Real(2.0, 64));
    const CertifiedReal b(Real(1.5, 64), Real(3.0, 64));
    CHECK(a.overlaps(b));
    CHECK(a.intersect(b).contains(1.75));
    CHECK(CertifiedReal::hull(a, b).contains(CertifiedReal(2.75, 64)));
    CHECK(max(a, b).lower() == Real(1.5, 64));
    CHECK(abs(CertifiedReal(-3.0, 64)).contains(3.0));
    CHECK((-a).certainly_negative());
    CHECK(a.certainly_positive());
    CHECK(a.ldexp(1).contains(4.0));
  }

  TEST_CASE("constants") {
    const auto& ctx = ctx60();
    CHECK(encloses(euler_gamma(ctx), "0.577215664901532860606512090082"));
    CHECK(encloses(CertifiedReal::pi(ctx.bits()), "3.14159265358979323846264338328"));
    CHECK(encloses(CertifiedReal::log2(ctx.bits()), "0.693147180559945309417232121458"));
  }

  TEST_CASE("zeta on the real axis") {
    const auto& ctx = ctx60();
    CHECK(encloses(zeta_real(2.0, ctx), "1.64493406684822643647241516665"));
    CHECK(encloses(zeta_real(3.0, ctx), "1.20205690315959428539973816151"));
    CHECK(encloses(zeta_real(1.5, ctx), "2.61237534868548834334856756792"));
    CHECK(encloses(zeta_real(CertifiedReal::parse("1.1", ctx.bits()), ctx),
                   "10.5844484649508098263864007917", 1e-27));
    CHECK(std::abs(zeta_real_approx(1.5) - 2.6123753486854883) < 1e-13);
    CHECK_THROWS_AS(zeta_real(1.0, ctx), Error);
  }

  TEST_CASE("Stieltjes constants") {
    const auto& ctx = ctx60();
    CHECK(encloses(stieltjes_constant(0, ctx), "0.577215664901532860606512090082"));
    CHECK(encloses(stieltjes_constant(1, ctx), "-0.0728158454836767248605863758749"));
    CHECK(encloses(stieltjes_constant(2, ctx), "-0.00969036319287231848453038603521"));
    CHECK(encloses(stieltjes_constant(5, ctx), "0.000793323817301062701753334877444"));
    CHECK(encloses(stieltjes_constant(10, ctx), "0.000205332814909064794683722289237"));
    CHECK(encloses(stieltjes_constant(20, ctx), "0.000466343561511559449400594824434"));
  }

  TEST_CASE("stored enclosures respect the Lavrik bound") {
    const auto& table = StieltjesTable::shipped();
    REQUIRE(table.n_max() >= 20);
    for (int n = 1; n <= table.n_max(); ++n) {
      CAPTURE(n);
      const CertifiedReal g = abs(table.enclosure(n, 200));
      CHECK(g.upper() <= lavrik_bound(n, 200).lower());
    }
    CHECK(lavrik_bound(3, 64).contains(6.0 / 16.0));
  }

  TEST_CASE("recomputed Stieltjes constants agree with the shipped table") {
    const auto computed = compute_stieltjes(6, 256, 200, 40);
    REQUIRE(computed.size() == 7);
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(computed[n].overlaps(StieltjesTable::shipped().enclosure(n, 256)));
    }
  }

  TEST_CASE("Stieltjes table text round trip") {
    const auto& table = StieltjesTable::shipped();
    const StieltjesTable again = StieltjesTable::parse(table.serialize());
    REQUIRE(again.n_max() == table.n_max());
    for (int n = 0; n <= table.n_max(); ++n) {
      CHECK(again.record(n).mid == table.record(n).mid);
      CHECK(again.record(n).rad == table.record(n).rad);
    }
    const StieltjesRecord r = to_record(1, stieltjes_constant(1, ctx60()), 25);
    CHECK(CertifiedReal::from_mid_rad(Real::parse(r.mid, 200), Real::parse(r.rad, 200))
              .overlaps(CertifiedReal::parse("-0.0728158454836767248605863758749", 200)));
  }

  TEST_CASE("Stieltjes table errors") {
    CHECK_THROWS_AS(StieltjesTable::parse("0 0.5 1e-30\n2 0.1 1e-30\n"), Error);
    CHECK_THROWS_AS(StieltjesTable::parse("0 zero 1e-30\n"), Error);
    try {
      static_cast<void>(stieltjes_constant(StieltjesTable::shipped().n_max() + 1, ctx60()));
      FAIL("expected an index error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::index_out_of_range);
    }
  }

  TEST_CASE("precision context") {
    CHECK(PrecisionContext().working_digits() == 60);
    CHECK(PrecisionContext(40).doubled().working_digits() == 80);
    CHECK(PrecisionContext(40).bits() > 132);
    CHECK_THROWS_AS(PrecisionContext(29), Error);
  }

  TEST_CASE("exact parameter parsing") {
    CHECK(parse_rational("0.777942") == Rational(388971, 500000));
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
    CHECK(parse_rational("1/W0") == Rational(1000000, 5558691));
    CHECK(parse_rational("H") == parse_rational("H0") - Rational(1, 2));
    CHECK(parse_rational("e^e").get_d() >= approx::e_to_e_ceil());
    CHECK(parse_rational("e^e").get_d() - 15.154262241479259 < 1e-14);
    CHECK_THROWS_AS(parse_rational("1.2.3"), Error);
    CHECK(format_rational(Rational(1, 3), 5) == "0.33333");
  }
}
