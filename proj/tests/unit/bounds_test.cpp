#include <cmath>
#include <vector>

#include "doctest.h"
#include "ezeta/bounds.hpp"
#include "ezeta/constants.hpp"
#include "ezeta/error.hpp"
#include "ezeta/fixtures.hpp"
#include "ezeta/optimizer.hpp"
#include "ezeta/param.hpp"
#include "support.hpp"

using namespace ezeta;
using ezeta::test::ctx60;
using ezeta::test::encloses;

namespace {

Rational q(const char* text) { return parse_rational(text); }

LadderTable q_ladder(const char* W_min) {
  return ladder_for_row(*FixtureSet::shipped().find("Y", "13"), FixtureSet::shipped())
      .from(q(W_min));
}

LadderTable full_q_ladder() {
  std::vector<std::pair<Rational, Rational>> entries;
  for (const FixtureRow* row : FixtureSet::shipped().table("Q")) {
    entries.emplace_back(q(row->row_key.c_str()), row->published);
  }
  return LadderTable(std::move(entries));
}

HParams q13() {
  return {q("1/W0"), q("0.713814"), q("0.041793"), q("1.671118"), q("3.367414"), q("H")};
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("a terms") {
    const ATerms a = a_terms(2, 1, 13, ctx60());
    CHECK(encloses(a.a0, "0.698516544429969882120476706238"));
    CHECK(encloses(a.a1, "0.230769230769230769230769230769"));
    CHECK_THROWS_AS(a_terms(2, 1, 1, ctx60()), Error);
  }

  TEST_CASE("Backlund constant") {
    CHECK(encloses(c_backlund(q("1.149567"), 13, 2, q("3.150198"), ctx60()),
                   "0.0285006138467359536262992667181"));
    CHECK(encloses(c_backlund(q("1.662479"), 13, 2, q("3.216997"), ctx60()),
                   "0.0302001789215681385106295322881"));
  }

  TEST_CASE("trigonometric factor") {
    const Rational kappa = q("0.030647") / q("2.564949357461536736053487441565318604805");
    const CertifiedReal v = v_factor(kappa, q("1.149567"), 13, q("3.150198"), ctx60());
    CHECK(std::abs(v.mid_double() - 14.6006561567221776) < 1e-6);
    CHECK(v.certainly_positive());
  }

  TEST_CASE("C3 on the one-line") {
    CHECK(encloses(c3(13, ctx60()), "84.8775303821314381904289272229"));
    CHECK(encloses(c3(3, ctx60()), "225.058937494244303371130100435"));
  }

  TEST_CASE("log-derivative under RH") {
    const ConditionedBound b08 = q_rh(RhParams::from_sigma0(q("0.8"), q("0.021126"), q("1.392644"),
                                                            q("3.173843"), 14, q("H0")),
                                      ctx60());
    CHECK(encloses(b08.value, "23.7589288079245258817745568696"));
    CHECK(b08.valid());
    const ConditionedBound b1 = q_rh(RhParams::from_sigma0(1, q("0.037999"), q("1.889284"),
                                                           q("3.054339"), 13, q("H0")),
                                     ctx60());
    CHECK(encloses(b1.value, "8.10095174838560563399935937853"));
    const ConditionEntry* tcond = b1.conditions.find("tcond_RH1");
    REQUIRE(tcond != nullptr);
    CHECK(tcond->margin > 0);
  }

  TEST_CASE("log-derivative in the zero-free region") {
    const HBound h = q_h(q13(), ctx60());
    CHECK(encloses(h.bound.value, "52.3059902609365018852187598831"));
    REQUIRE(h.W.has_value());
    CHECK(encloses(*h.W, "12.9999918064405607648396629966"));
    CHECK(h.bound.valid());
    CHECK(h.bound.region.kind == Region::Kind::zero_free);
    CHECK(h.bound.branches.size() >= 2);
    CHECK(h.bound.branches[h.bound.selected].value.overlaps(h.bound.value));

    HParams row10{q("1/W0"), q("0.777942"), q("0.016334"), q("1.624690"), q("4.127955"), q("H")};
    CHECK(encloses(q_h(row10, ctx60()).bound.value, "71.2192803713873203503819234248"));
  }

  TEST_CASE("beta for a target W") {
    const Rational beta = beta_for_W(13, q("1/W0"), q("0.041793"), q("H"));
    CHECK(std::abs(beta.get_d() - 0.713813865246609391848693137889) < 1e-14);
    HParams p = q13();
    p.beta = beta;
    const HBound h = q_h(p, ctx60());
    REQUIRE(h.W.has_value());
    CHECK(ezeta::test::rel_diff(*h.W, 13.0) < 1e-12);
  }

  TEST_CASE("beta at its floor violates the conditions") {
    HParams p = q13();
    p.beta = q("0.5");
    const HBound h = q_h(p, ctx60());
    CHECK_FALSE(h.bound.valid());
    CHECK_FALSE(h.bound.conditions.find("beta_conds")->satisfied);
  }

  TEST_CASE("ladder") {
    CHECK(encloses(ladder_sum(full_q_ladder().from(10), ctx60()),
                   "5.50847902097902097902097902098"));
    CHECK_THROWS_AS(LadderTable({{q("6"), q("10")}, {q("5.9"), q("12")}}), Error);
    CHECK_THROWS_AS(LadderTable({{q("6"), q("-1")}}), Error);
    CHECK(full_q_ladder().from(13).size() == 1);
  }

  TEST_CASE("reciprocal constants") {
    const ReciprocalParams y13{q("0.030647"), q("1.149567"), q("3.150198"), 13, q_ladder("13"),
                               false};
    CHECK(encloses(y0(y13, ctx60()).value, "1718.86414781555980351530172849"));
    const ReciprocalParams ysig1{q("0.032871"), q("1.662479"), q("3.216997"), 13, {}, false};
    CHECK(encloses(y0(ysig1, ctx60()).value, "30.811823726161504880046294397"));

    const ReciprocalParams yp13{q("0.030648"), 2, 1, 13, q_ladder("13"), true};
    CHECK(encloses(yprime0(yp13, ctx60()).value, "4903.68784995444600627684992054"));
    const ReciprocalParams ypsig1{q("0.030648"), 2, 1, 13, {}, true};
    CHECK(encloses(yprime0(ypsig1, ctx60()).value, "87.7247754639756586486065263847"));
  }

  TEST_CASE("strip constant") {
    const StripBound b3 = c0_strip(q("W0"), 1, 3, q("2/3"), ctx60());
    CHECK(encloses(b3.constant, "2.11720989176004307384444026929"));
    const StripBound b1e3 = c0_strip(q("W0"), 1, 1000, q("0.41"), ctx60());
    CHECK(encloses(b1e3.constant, "0.22531958553178711225955067832"));
    CHECK(b3.main_coefficient.overlaps(exp(CertifiedReal(1.0, ctx60().bits()) /
                                           CertifiedReal::parse("5.558691", ctx60().bits()))));
  }

  TEST_CASE("rescaling") {
    CHECK(encloses(rescale_loglog(q("7.686"), q("e^e"), q("1e6"), ctx60()),
                   "40.4396150217041597764254507735"));
    CHECK(encloses(rescale_log_power(8, 1, 500, q("2exp(e^2)"), ctx60()),
                   "1.28728953995201983303720248873"));
    CHECK_THROWS_AS(rescale_loglog(1, 2, 100, ctx60()), Error);
  }

  TEST_CASE("truncated Laurent quantities") {
    CHECK(encloses(phi_family(q("1.45"), 1, ctx60()).phi0, "0.00010584014507388102597354656306",
                   1e-25));
    CHECK(encloses(phi_family(2, 3, ctx60()).phi0, "0.0051283581505233413072945084335", 1e-25));
    CHECK(encloses(phi_family(q("1.83"), 3, ctx60()).phi1, "0.998653866220158645258858294078",
                   1e-25));
    CHECK(encloses(phi_family(q("1.49"), 10, ctx60()).phi1, "0.850408205717274078898475003852",
                   1e-25));
    CHECK(phi2(q("1.49"), ctx60()).overlaps(CertifiedReal::parse("0.852", ctx60().bits())));
    CHECK_THROWS_AS(phi_family(3, 3, ctx60()), Error);
  }

  TEST_CASE("elementary bounds") {
    const TrivialBounds t = trivial_bounds(2, ctx60());
    CHECK(encloses(t.zeta_upper, "1.78107241799019798523650410311"));
    CHECK(t.logderiv_upper.contains(1.0));
    CHECK(t.recip_upper.contains(2.0));
    CHECK(aleks_bound(1, 10, ctx60()).contains(8.0));
    CHECK_THROWS_AS(aleks_bound(q("1/2"), 10, ctx60()), Error);
  }

  TEST_CASE("strip convexity bound") {
    const KParams kp{q("0.618"), q("1/6"), 1, 1, q("1.31"), q("1/2")};
    const ConditionedBound b = plp_strip_bound(kp, q("0.75"), 1000, 100, ctx60());
    CHECK(b.value.certainly_positive());
    CHECK(b.region.sigma_max >= 0.75);
    const ConditionedBound cor = plp_cor_bound(q("0.25"), 100, 1000, ctx60());
    CHECK(cor.value.certainly_positive());
  }

  TEST_CASE("regions") {
    const Region r = Region::zero_free(13, 100);
    CHECK(std::abs(r.sigma_floor(std::exp(1.0)) - (1 - 1.0 / 13)) < 1e-12);
    CHECK(Region::half_plane(1, 3).sigma_floor(1e9) == 1);
    CHECK_FALSE(r.describe().empty());
  }
}
