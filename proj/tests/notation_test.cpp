#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/notation.hpp"

#include <random>

using namespace blowup;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/2") == Rat(3, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("-5/3") == Rat(-5, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_integer("1/2"), ParseError);
}

TEST_CASE("int pairs") {
  CHECK(parse_int_pair("2,-1") == std::pair<long long, long long>{2, -1});
  CHECK_THROWS_AS(parse_int_pair("2"), ParseError);
  CHECK_THROWS_AS(parse_int_pair("2,x"), ParseError);
}

TEST_CASE("chow class notation") {
  CHECK(parse_chow("1 + 2 H - E") ==
        ChowClass::one() + 2 * ChowClass::H() - ChowClass::E());
  CHECK(parse_chow("3/2 H2 + 1/3 E2 - 2 P") ==
        Rat(3, 2) * ChowClass::H2() + Rat(1, 3) * ChowClass::E2() -
            2 * ChowClass::point());
  CHECK(parse_chow("H") == ChowClass::H());
  CHECK(parse_chow("") == ChowClass{});
  CHECK_THROWS_AS(parse_chow("1 +"), ParseError);
  CHECK_THROWS_AS(parse_chow("+ + H"), ParseError);
}

TEST_CASE("format/parse round trip") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 6);
  for (int i = 0; i < 200; ++i) {
    const ChowClass x{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
                      Rat(num(rng), den(rng)), Rat(num(rng), den(rng)),
                      Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
    CHECK(parse_chow(format_chow(x)) == x);
  }
  CHECK(format_chow(ChowClass{}) == "0");
  CHECK(format_chow(todd_class()) == "1 + 2 H - E + 11/6 H2 + 1/3 E2 + P");
}

TEST_CASE("bundle literals") {
  CHECK(parse_bundle("O(2,-1)") ==
        BundleDescriptor{BundleKind::LineBundle, {2, -1}});
  CHECK(parse_bundle("Omega1(0,-1)") ==
        BundleDescriptor{BundleKind::OmegaTwist, {0, -1}});
  CHECK_THROWS_AS(parse_bundle("T(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_bundle("O(1)"), ParseError);
}

TEST_CASE("curve literals") {
  const CurveProfile p = parse_curve_literal("P*2,F,X*1");
  REQUIRE(p.components.size() == 4);
  CHECK(p.components[0].tag == LineTag::PullbackLine);
  CHECK(p.components[1].tag == LineTag::PullbackLine);
  CHECK(p.components[2].tag == LineTag::FiberLine);
  CHECK(p.components[3].tag == LineTag::ExceptionalLine);
  const CurveProfile c = parse_curve_literal("(2.1.0),P");
  REQUIRE(c.components.size() == 2);
  CHECK(c.components[0] == custom_component(2, 1, 0));
  CHECK(parse_curve_literal("").components.empty());
  CHECK_THROWS_AS(parse_curve_literal("Q"), ParseError);
  CHECK_THROWS_AS(parse_curve_literal("(1.2)"), ParseError);
}
