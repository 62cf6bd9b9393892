#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/sheafdata.hpp"

#include <random>

using namespace blowup;

TEST_CASE("chern_character") {
  CHECK(chern_character({1, 0, 0, 0, 0, 0}) == ChowClass::one());
  for (long long p = -4; p <= 4; ++p)
    for (long long q = -4; q <= 4; ++q)
      CHECK(chern_character({1, p, q, 0, 0, 0}) == exp_divisor(p, q));
  const ChernData d{2, 0, 0, 3, 1, 0};
  CHECK(chern_character(d) ==
        2 * ChowClass::one() - 3 * ChowClass::H2() - 1 * ChowClass::E2());
}

TEST_CASE("chi_line_bundle golden values") {
  CHECK(chi_line_bundle({0, 0}) == 1);
  CHECK(chi_line_bundle({2, -1}) == 9);
  CHECK(chi_line_bundle({0, -1}) == 0);
  CHECK(chi_line_bundle({1, 0}) == 4);
  CHECK(chi_line_bundle({-2, 1}) == 0);
}

TEST_CASE("euler_characteristic") {
  // rank-1 trivial data reduces to the line-bundle formula
  for (long long p = -6; p <= 6; ++p)
    for (long long q = -6; q <= 6; ++q)
      CHECK(euler_characteristic({1, 0, 0, 0, 0, 0}, {p, q}) ==
            chi_line_bundle({p, q}));
  CHECK(euler_characteristic({1, 1, 0, 0, 0, 0}, {1, 0}) == 10);
  // Lemma-style vanishing at (-2,1) for rank 2, c1 = 0, m = 0
  for (long long k = -6; k <= 6; ++k)
    for (long long l = -6; l <= 6; ++l)
      CHECK(euler_characteristic_exact({2, 0, 0, k, l, 0}, {-2, 1}) == 0);
}

TEST_CASE("twist") {
  const ChernData d{2, 0, 0, 5, 2, 0};
  CHECK(twist(d, {0, 0}) == d);
  const ChernData t = twist(d, {-2, 1});
  CHECK(t.a == -4);
  CHECK(t.b == 2);
  CHECK(t.k == 5 + 4);
  CHECK(t.l == 2 + 1);
  // rank-2 shorthand a -> a+2p, k -> k+ap+p^2 against the ring route
  const ChernData e{2, 1, -1, 2, 1, 0};
  const ChernData te = twist(e, {3, -2});
  CHECK(te.a == 1 + 2 * 3);
  CHECK(te.b == -1 + 2 * (-2));
  CHECK(te.k == 2 + 1 * 3 + 9);
  CHECK(te.l == 1 + (-1) * (-2) + 4);
}

TEST_CASE("twist is a homomorphism") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> c(-8, 8);
  for (int i = 0; i < 300; ++i) {
    const ChernData d{1 + (c(rng) & 3), c(rng), c(rng), c(rng), c(rng), c(rng)};
    const Twist t1{c(rng), c(rng)}, t2{c(rng), c(rng)};
    CHECK(twist(twist(d, t1), t2) == twist(d, t1 + t2));
  }
}

TEST_CASE("character/chi consistency") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long long> c(-8, 8);
  const ChowClass td = todd_class();
  for (int i = 0; i < 300; ++i) {
    const ChernData d{1 + (c(rng) & 3), c(rng), c(rng), c(rng), c(rng), c(rng)};
    const Twist t{c(rng), c(rng)};
    CHECK(degree(mul(chern_character(twist(d, t)), td)) ==
          euler_characteristic_exact(d, t));
  }
}

TEST_CASE("Serre duality numerics for rank 2, c1 = 0") {
  for (long long k = -4; k <= 4; ++k)
    for (long long l = -4; l <= 4; ++l)
      for (long long p = -5; p <= 5; ++p)
        for (long long q = -5; q <= 5; ++q) {
          const ChernData d{2, 0, 0, k, l, 0};
          CHECK(euler_characteristic_exact(d, {p, q}) ==
                -euler_characteristic_exact(d, {-4 - p, 2 - q}));
        }
}

TEST_CASE("dual_rank2") {
  const ChernData d{2, 1, -1, 3, 2, 1};
  CHECK(dual_rank2(d) == ChernData{2, -1, 1, 3, 2, 1});
  CHECK(dual_rank2(dual_rank2(d)) == d);
  CHECK(dual_rank2({2, 0, 0, 4, 2, 0}) == ChernData{2, 0, 0, 4, 2, 0});
  CHECK_THROWS_AS(dual_rank2({1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("parity predicate") {
  CHECK(is_parity_consistent({2, 0, 0, 1, 0, 0}));
  CHECK_FALSE(is_parity_consistent({2, 0, 0, 1, 0, 1}));
  CHECK(is_parity_consistent({1, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(make_chern_data(2, 0, 0, 1, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(make_chern_data(2, 0, 0, 1, 0, 1, /*allow_parity_violation=*/true));
}

TEST_CASE("local-freeness verdict") {
  CHECK(locally_free_verdict_reflexive_rank2({2, 0, 0, 2, 0, 0}));
  CHECK_FALSE(locally_free_verdict_reflexive_rank2({2, 0, 0, 2, 0, 2}));
  CHECK_FALSE(locally_free_verdict_reflexive_rank2(
      make_chern_data(2, 1, 0, 1, 0, 1)));
  CHECK_THROWS_AS(locally_free_verdict_reflexive_rank2({1, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
}
