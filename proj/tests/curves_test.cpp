#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/curves.hpp"

using namespace blowup;

TEST_CASE("restriction degrees") {
  CHECK(restriction_degree(pullback_line(), {1, 0}) == 1);
  CHECK(restriction_degree(exceptional_line(), {1, -1}) == 1);
  CHECK(restriction_degree(fiber_line(), {2, -1}) == 1);
  CHECK(restriction_degree(pullback_line(), {0, 0}) == 0);
  CHECK(restriction_degree(custom_component(3, -2, 1), {2, -1}) == 8);
}

TEST_CASE("curve classes") {
  CHECK(curve_class({{pullback_line()}}) == ChowClass::H2());
  CHECK(curve_class({{fiber_line()}}) == ChowClass::H2() + ChowClass::E2());
  CHECK(curve_class({{exceptional_line()}}) == -1 * ChowClass::E2());
  CHECK(curve_class({}) == ChowClass{});
  // fiber line solves H.f = E.f = 1 in the {H^2, E^2} basis
  const ChowClass f = curve_class({{fiber_line()}});
  CHECK(degree(mul(ChowClass::H(), f)) == 1);
  CHECK(degree(mul(ChowClass::E(), f)) == 1);
}

TEST_CASE("grr_pushforward") {
  const CurveSheafData pull{{{pullback_line()}}, {-1}};
  CHECK(grr_pushforward(pull, {2, -1}) == ChowClass::H2());
  CHECK(grr_pushforward({}, {2, -1}) == ChowClass{});
  CHECK(grr_pushforward(pull, {0, 0}) ==
        ChowClass::H2() - 2 * ChowClass::point());
  // rank and codimension-1 parts always vanish
  const CurveSheafData mix{{{pullback_line(), fiber_line(), exceptional_line()}},
                           {3, -2, 0}};
  const ChowClass push = grr_pushforward(mix, {1, 1});
  CHECK(push.c0 == 0);
  CHECK(push.cH == 0);
  CHECK(push.cE == 0);
}

TEST_CASE("grr point part vanishes at (2,-1) with degrees g-1") {
  const CurveComponent catalog[] = {pullback_line(), fiber_line(),
                                    exceptional_line()};
  for (const auto& a : catalog)
    for (const auto& b : catalog) {
      const CurveSheafData d{{{a, b}}, {a.genus - 1, b.genus - 1}};
      CHECK(degree(grr_pushforward(d, {2, -1})) == 0);
    }
}

TEST_CASE("twisted_curve_cohomology") {
  const CurveSheafData pull{{{pullback_line()}}, {-1}};
  CHECK(twisted_curve_cohomology(pull, {0, 0}) == CohomTable{0, 0, 0, 0});
  CHECK(twisted_curve_cohomology(pull, {1, 0}) == CohomTable{1, 0, 0, 0});
  const CurveSheafData fiber{{{fiber_line()}}, {-1}};
  CHECK(twisted_curve_cohomology(fiber, {1, -1}) == CohomTable{0, 0, 0, 0});
  const CurveSheafData low{{{pullback_line()}}, {-3}};
  CHECK(twisted_curve_cohomology(low, {0, 0}) == CohomTable{0, 2, 0, 0});
  // alternating sum is the Riemann-Roch value deg + 1 per component
  for (long long deg = -5; deg <= 5; ++deg)
    for (long long p = -3; p <= 3; ++p) {
      const CurveSheafData d{{{pullback_line()}}, {deg}};
      const CohomTable t = twisted_curve_cohomology(d, {p, 0});
      CHECK(t.h0 - t.h1 == deg + p + 1);
    }
}

TEST_CASE("positive genus is rejected") {
  const CurveSheafData d{{{custom_component(2, 0, 1)}}, {0}};
  CHECK_THROWS_AS(twisted_curve_cohomology(d, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(custom_component(1, 0, -1), std::invalid_argument);
}

TEST_CASE("degrees/components length mismatch is rejected") {
  const CurveSheafData d{{{pullback_line(), fiber_line()}}, {-1}};
  CHECK_THROWS_AS(twisted_curve_cohomology(d, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(grr_pushforward(d, {0, 0}), std::invalid_argument);
}
