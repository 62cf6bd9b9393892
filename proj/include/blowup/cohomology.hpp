#pragma once

#include "blowup/sheafdata.hpp"

#include <stdexcept>

namespace blowup {

/// (h0, h1, h2) of a line bundle or of the cotangent bundle on the plane.
struct PlaneCohom {
  long long h0{0};
  long long h1{0};
  long long h2{0};

  bool operator==(const PlaneCohom&) const = default;
};

/// O(d) on P^2: h0 = C(d+2,2) for d >= 0, h2 = C(-d-1,2) for d <= -3,
/// h1 = 0 always.
inline PlaneCohom plane_cohomology(long long d) {
  PlaneCohom h;
  if (d >= 0) h.h0 = (d + 2) * (d + 1) / 2;
  if (d <= -3) h.h2 = (-d - 1) * (-d - 2) / 2;
  return h;
}

/// Omega^1(d) on P^2 (Bott values): h0 = d^2-1 for d >= 2, h1 = 1 iff d = 0,
/// h2 = d^2-1 for d <= -2; chi = d^2 - 1 in every case.
inline PlaneCohom plane_cotangent_cohomology(long long d) {
  PlaneCohom h;
  if (d >= 2) h.h0 = d * d - 1;
  if (d == 0) h.h1 = 1;
  if (d <= -2) h.h2 = d * d - 1;
  return h;
}

enum class BundleKind { LineBundle, OmegaTwist };

/// Either O(p,q) or Omega^1(p,q), where Omega^1 is the pull-back of the
/// plane cotangent bundle along the projection pr : X -> P^2.
struct BundleDescriptor {
  BundleKind kind{BundleKind::LineBundle};
  Twist twist;

  bool operator==(const BundleDescriptor&) const = default;
};

struct CohomTable {
  long long h0{0};
  long long h1{0};
  long long h2{0};
  long long h3{0};

  long long chi() const { return h0 - h1 + h2 - h3; }
  bool all_zero() const { return h0 == 0 && h1 == 0 && h2 == 0 && h3 == 0; }
  CohomTable reversed() const { return {h3, h2, h1, h0}; }

  bool operator==(const CohomTable&) const = default;
};

/// Full h^0..h^3 table.
///
/// X is the projective bundle P(O + O(1)) over the plane; the relative
/// hyperplane class is O(1,0) (it satisfies xi^2 = xi . pr* c1(O + O(1)),
/// which fails for E), and pr* of the plane hyperplane is H - E.  So
/// V(p,q) = V_plane twisted by O_rel(p+q) (x) pr* O(-q) and, for fiber
/// degree n = p+q:
///   n >= 0   : pr_* is the plane bundle sum over O(j - q), j = 0..n,
///              so h^i is the sum of plane h^i values (no higher direct
///              images; ambient h3 = 0),
///   n = -1   : everything vanishes,
///   n <= -2  : Serre duality; partner O(-4-p, 2-q), resp.
///              Omega^1(-1-p, -1-q) via Omega-dual = Omega^1 (x) O(3,-3).
inline CohomTable cohomology_table(const BundleDescriptor& b) {
  const long long p = b.twist.p, q = b.twist.q;
  const long long fiber_degree = p + q;
  if (fiber_degree == -1) return {};
  if (fiber_degree <= -2) {
    BundleDescriptor dual;
    dual.kind = b.kind;
    if (b.kind == BundleKind::LineBundle)
      dual.twist = {-4 - p, 2 - q};
    else
      dual.twist = {-1 - p, -1 - q};
    return cohomology_table(dual).reversed();
  }
  CohomTable t;
  for (long long j = 0; j <= fiber_degree; ++j) {
    const PlaneCohom h = b.kind == BundleKind::LineBundle
                             ? plane_cohomology(j - q)
                             : plane_cotangent_cohomology(j - q);
    t.h0 += h.h0;
    t.h1 += h.h1;
    t.h2 += h.h2;
  }
  return t;
}

inline bool is_cohomologically_trivial(const BundleDescriptor& b) {
  return cohomology_table(b).all_zero();
}

/// Direct image pi_* O(qE) under the blow-down pi : X -> P^3: the (-q)-th
/// power of the ideal of the blown-up point for q < 0, the structure sheaf
/// for q >= 0.
struct PushforwardImage {
  enum class Kind { StructureSheaf, IdealPower };
  Kind kind{Kind::StructureSheaf};
  long long power{0};  // exponent of the ideal sheaf; 0 for StructureSheaf

  bool operator==(const PushforwardImage&) const = default;
};

inline PushforwardImage pushforward_line_bundle(long long q) {
  if (q < 0) return {PushforwardImage::Kind::IdealPower, -q};
  return {PushforwardImage::Kind::StructureSheaf, 0};
}

/// ch of Omega^1: pull-back of 2 - 3h + (3/2)h^2 along pr*h = H - E.
inline ChowClass omega1_chern_character() {
  const ChowClass h = ChowClass::H() - ChowClass::E();
  return 2 * ChowClass::one() - 3 * h + Rat(3, 2) * mul(h, h);
}

}  // namespace blowup
