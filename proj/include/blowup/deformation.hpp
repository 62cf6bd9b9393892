#pragma once

#include "blowup/curves.hpp"
#include "blowup/instanton.hpp"
#include "blowup/transform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

/// Dimension 8k - 4l - 3 of the t'Hooft component at charge kH^2 + lE^2.
inline long long thooft_component_dimension(long long k, long long l) {
  if (!is_admissible_charge(2, k, l))
    throw std::invalid_argument("inadmissible charge");
  return 8 * k - 4 * l - 3;
}

namespace detail {

inline CurveComponent catalog_component(LineTag tag) {
  switch (tag) {
    case LineTag::PullbackLine: return pullback_line();
    case LineTag::FiberLine: return fiber_line();
    case LineTag::ExceptionalLine: return exceptional_line();
    default:
      throw std::invalid_argument("not a catalog line type");
  }
}

}  // namespace detail

/// h^0(i_*L^2 (x) O(4,-2)) for L of degree g-1 on a catalog line: a bundle
/// of degree 2(g-1) + deg O(4,-2)|_C on P^1.  Pull-back line: degree 2,
/// h^0 = 3.  Fiber line: degree 0, h^0 = 1.
inline long long h0_twisted_square(LineTag tag) {
  if (tag != LineTag::PullbackLine && tag != LineTag::FiberLine)
    throw std::invalid_argument(
        "twisted-square section count is only available for pull-back and fiber lines");
  const CurveComponent c = detail::catalog_component(tag);
  const long long deg = 2 * (c.genus - 1) + restriction_degree(c, {4, -2});
  return deg >= 0 ? deg + 1 : 0;
}

struct DeformationReport {
  long long ext1{0};
  long long h0_local_ext{0};  // h0 of Ext^1(F,F)
  long long h1_local_ext{0};  // h1 of Ext^1(F,F)
  long long h1_hom{0};        // h1 of Hom(F,F)
  long long component_dimension{0};
  bool smooth{false};
  std::pair<long long, long long> boundary_component{0, 0};
  std::string notes;
};

/// Deformation bookkeeping of a single-line elementary transform of a
/// t'Hooft bundle of charge (k,l).  Local Ext^1 decomposes as
/// O(1pt)^2 (+) O for a pull-back line (h0 = 5) and
/// O(1pt) (+) O (+) O(-1pt) for a fiber line (h0 = 3); h1 vanishes, so the
/// transform is a smooth boundary point of the next t'Hooft component.
inline DeformationReport transform_deformation_report(long long k, long long l,
                                                      LineTag tag) {
  if (!is_admissible_charge(2, k, l))
    throw std::invalid_argument("inadmissible charge");
  if (tag != LineTag::PullbackLine && tag != LineTag::FiberLine)
    throw std::invalid_argument(
        "deformation data exists only for pull-back and fiber lines");

  // hypothesis check: h^1 of i_*L^2(4,-2) must vanish on the line
  const CurveComponent c = detail::catalog_component(tag);
  CurveSheafData square{{{c}}, {2 * (c.genus - 1)}};
  if (twisted_curve_cohomology(square, {4, -2}).h1 != 0)
    throw std::logic_error("h1 of the twisted square does not vanish");

  // local Ext^1 degree lists from the per-type decompositions
  const std::vector<long long> local_degrees =
      tag == LineTag::PullbackLine ? std::vector<long long>{1, 1, 0}
                                   : std::vector<long long>{1, 0, -1};
  DeformationReport rep;
  for (long long d : local_degrees) {
    rep.h0_local_ext += d >= 0 ? d + 1 : 0;
    rep.h1_local_ext += d < -1 ? -d - 1 : 0;
  }
  rep.h1_hom = 8 * k - 4 * l - 3 + h0_twisted_square(tag);
  rep.ext1 = rep.h0_local_ext + rep.h1_hom;
  rep.boundary_component = tag == LineTag::PullbackLine
                               ? std::pair<long long, long long>{k + 1, l}
                               : std::pair<long long, long long>{k + 1, l + 1};
  rep.component_dimension = thooft_component_dimension(
      rep.boundary_component.first, rep.boundary_component.second);
  rep.smooth = rep.h1_local_ext == 0;
  rep.notes =
      "hypothesis checked as h1-vanishing only; h0 of the twisted square is "
      "nonzero for catalog lines";
  if (rep.ext1 != rep.component_dimension)
    throw std::logic_error("ext1 does not match the boundary component dimension");
  return rep;
}

/// Dimension of the component reached after transforming along the given
/// catalog lines; every intermediate step must be a smooth boundary point.
inline long long iterated_deformation_dimension(long long k, long long l,
                                                const std::vector<LineTag>& steps) {
  long long ck = k, cl = l;
  for (LineTag tag : steps) {
    const DeformationReport rep = transform_deformation_report(ck, cl, tag);
    if (!rep.smooth) throw std::logic_error("non-smooth intermediate step");
    ck = rep.boundary_component.first;
    cl = rep.boundary_component.second;
  }
  return thooft_component_dimension(ck, cl);
}

}  // namespace blowup
