#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blowup/deformation.hpp"

using namespace blowup;

TEST_CASE("thooft_component_dimension") {
  CHECK(thooft_component_dimension(1, 0) == 5);
  CHECK(thooft_component_dimension(2, 1) == 9);
  for (long long k = 1; k <= 8; ++k)
    for (long long l = 0; l < k; ++l) {
      if (!is_admissible_charge(2, k, l + 1)) continue;
      CHECK(thooft_component_dimension(k, l + 1) ==
            thooft_component_dimension(k, l) - 4);
    }
  CHECK_THROWS_AS(thooft_component_dimension(0, 0), std::invalid_argument);
}

TEST_CASE("h0_twisted_square") {
  CHECK(h0_twisted_square(LineTag::PullbackLine) == 3);
  CHECK(h0_twisted_square(LineTag::FiberLine) == 1);
  // degree bookkeeping: 2(g-1) + restriction at (4,-2)
  CHECK(2 * (0 - 1) + restriction_degree(pullback_line(), {4, -2}) == 2);
  CHECK(2 * (0 - 1) + restriction_degree(fiber_line(), {4, -2}) == 0);
  CHECK_THROWS_AS(h0_twisted_square(LineTag::ExceptionalLine),
                  std::invalid_argument);
  CHECK_THROWS_AS(h0_twisted_square(LineTag::Custom), std::invalid_argument);
}

TEST_CASE("transform_deformation_report, pull-back line") {
  const DeformationReport rep =
      transform_deformation_report(1, 0, LineTag::PullbackLine);
  CHECK(rep.ext1 == 13);
  CHECK(rep.ext1 == 8 * 2 - 4 * 0 - 3);
  CHECK(rep.h0_local_ext == 5);
  CHECK(rep.h1_local_ext == 0);
  CHECK(rep.h1_hom == 8);
  CHECK(rep.smooth);
  CHECK(rep.boundary_component == std::pair<long long, long long>{2, 0});
}

TEST_CASE("transform_deformation_report, fiber line") {
  const DeformationReport rep =
      transform_deformation_report(1, 0, LineTag::FiberLine);
  CHECK(rep.ext1 == 9);
  CHECK(rep.ext1 == 8 * 2 - 4 * 1 - 3);
  CHECK(rep.h0_local_ext == 3);
  CHECK(rep.h1_local_ext == 0);
  CHECK(rep.smooth);
  CHECK(rep.boundary_component == std::pair<long long, long long>{2, 1});
}

TEST_CASE("report identities across charges") {
  for (long long k = 1; k <= 10; ++k)
    for (long long l = 0; l <= 10; ++l) {
      if (!is_admissible_charge(2, k, l)) continue;
      for (LineTag tag : {LineTag::PullbackLine, LineTag::FiberLine}) {
        const DeformationReport rep = transform_deformation_report(k, l, tag);
        CHECK(rep.ext1 == rep.h0_local_ext + rep.h1_hom);
        CHECK(rep.h1_hom == 8 * k - 4 * l - 3 + h0_twisted_square(tag));
        CHECK(rep.h1_local_ext == 0);
        CHECK(rep.ext1 == thooft_component_dimension(
                              rep.boundary_component.first,
                              rep.boundary_component.second));
      }
    }
}

TEST_CASE("unsupported line types are refused") {
  CHECK_THROWS_AS(transform_deformation_report(1, 0, LineTag::ExceptionalLine),
                  std::invalid_argument);
  CHECK_THROWS_AS(transform_deformation_report(1, 0, LineTag::Custom),
                  std::invalid_argument);
  CHECK_THROWS_AS(transform_deformation_report(0, 0, LineTag::PullbackLine),
                  std::invalid_argument);
}

TEST_CASE("iterated_deformation_dimension") {
  CHECK(iterated_deformation_dimension(1, 0, {}) == 5);
  CHECK(iterated_deformation_dimension(
            1, 0, {LineTag::PullbackLine, LineTag::PullbackLine}) == 21);
  CHECK(iterated_deformation_dimension(1, 0, {LineTag::FiberLine}) == 9);
  // matches the trajectory of charges under iterate_transforms
  const Trajectory traj = iterate_transforms(
      make_instanton(2, 1, 0, 0, Stability::MuStable),
      {{{{{pullback_line()}}, {-1}}}, {{{{fiber_line()}}, {-1}}}});
  REQUIRE(traj.ok);
  const auto& final_charge = traj.steps.back().state.chern;
  CHECK(iterated_deformation_dimension(
            1, 0, {LineTag::PullbackLine, LineTag::FiberLine}) ==
        thooft_component_dimension(final_charge.k, final_charge.l));
}
