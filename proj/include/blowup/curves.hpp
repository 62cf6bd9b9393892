#pragma once

#include "blowup/chow.hpp"
#include "blowup/cohomology.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace blowup {

/// Catalog line types, by intersection profile (H.C, E.C):
///   PullbackLine    (1, 0)  pull-back of a line avoiding the blown-up point
///   FiberLine       (1, 1)  fiber of the projection to the plane
///   ExceptionalLine (0,-1)  line inside the exceptional plane
enum class LineTag { PullbackLine, FiberLine, ExceptionalLine, Custom };

struct CurveComponent {
  long long hdot{0};   // H . C
  long long edot{0};   // E . C
  long long genus{0};
  LineTag tag{LineTag::Custom};

  bool operator==(const CurveComponent&) const = default;
};

inline CurveComponent pullback_line() {
  return {1, 0, 0, LineTag::PullbackLine};
}
inline CurveComponent fiber_line() { return {1, 1, 0, LineTag::FiberLine}; }
inline CurveComponent exceptional_line() {
  return {0, -1, 0, LineTag::ExceptionalLine};
}
inline CurveComponent custom_component(long long hdot, long long edot,
                                       long long genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  return {hdot, edot, genus, LineTag::Custom};
}

/// A reduced curve given by per-component intersection numbers.  Components
/// being pairwise disjoint is a caller assertion, carried as a flag.
struct CurveProfile {
  std::vector<CurveComponent> components;
  bool pairwise_disjoint{true};

  bool operator==(const CurveProfile&) const = default;
};

/// A line bundle on the curve, one degree per component.
struct CurveSheafData {
  CurveProfile profile;
  std::vector<long long> degrees;

  bool operator==(const CurveSheafData&) const = default;
};

inline void check_degrees_match(const CurveSheafData& d) {
  if (d.profile.components.size() != d.degrees.size())
    throw std::invalid_argument("one degree per curve component required");
}

/// Degree of O(p,q) restricted to the component: p*(H.C) + q*(E.C).
inline long long restriction_degree(const CurveComponent& c, const Twist& t) {
  return t.p * c.hdot + t.q * c.edot;
}

/// [Sigma] in A^2, solved from the intersection profile:
/// sum over components of hdot*H^2 + eps*edot*E^2.
inline ChowClass curve_class(const CurveProfile& p, int eps) {
  ChowClass cls;
  for (const auto& c : p.components) {
    cls.cH2 += c.hdot;
    cls.cE2 += eps * c.edot;
  }
  return cls;
}

inline ChowClass curve_class(const CurveProfile& p) {
  return curve_class(p, epsilon());
}

/// GRR pushforward of i_*(L (x) i^*O(p,q)):
/// per component, [C] + (deg L + deg O(p,q)|_C - deg O(2,-1)|_C - g + 1)[pt],
/// the point coefficient combining ch(L (x) i^*O(p,q)) with the inverse Todd
/// class 1 - (2d1 - d2 + g - 1)[pt] of the normal sheaf.
inline ChowClass grr_pushforward(const CurveSheafData& d, const Twist& t,
                                 int eps) {
  check_degrees_match(d);
  ChowClass out;
  for (std::size_t i = 0; i < d.profile.components.size(); ++i) {
    const auto& c = d.profile.components[i];
    out.cH2 += c.hdot;
    out.cE2 += eps * c.edot;
    out.cPt += d.degrees[i] + restriction_degree(c, t) -
               restriction_degree(c, {2, -1}) - c.genus + 1;
  }
  return out;
}

inline ChowClass grr_pushforward(const CurveSheafData& d, const Twist& t) {
  return grr_pushforward(d, t, epsilon());
}

/// h^i of i_*(L (x) O(p,q)) for a disjoint union of rational components:
/// per component a degree-(deg L + restriction degree) bundle on P^1.
inline CohomTable twisted_curve_cohomology(const CurveSheafData& d,
                                           const Twist& t) {
  check_degrees_match(d);
  CohomTable table;
  for (std::size_t i = 0; i < d.profile.components.size(); ++i) {
    const auto& c = d.profile.components[i];
    if (c.genus != 0)
      throw std::invalid_argument(
          "twisted_curve_cohomology supports only genus-0 components");
    const long long deg = d.degrees[i] + restriction_degree(c, t);
    if (deg >= 0)
      table.h0 += deg + 1;
    else
      table.h1 += -deg - 1;
  }
  return table;
}

}  // namespace blowup
