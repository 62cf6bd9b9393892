#pragma once

#include "blowup/curves.hpp"
#include "blowup/instanton.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

enum class SurjectivityWitness { CatalogVerified, AssertedByCaller };

/// (Sigma, L, phi) against a rank-2 instanton: the curve with its line
/// bundle, the source data, and how surjectivity of phi is vouched for.
struct ElementaryData {
  CurveSheafData curve;
  InstantonData source;
  SurjectivityWitness witness{SurjectivityWitness::AssertedByCaller};
};

enum class Verdict { Valid, ValidByAssertion, Invalid };

struct ElementaryReport {
  CheckStatus degrees_match_genus{CheckStatus::Unknown};  // deg L_c = g_c - 1
  CheckStatus untwisted_vanishing{CheckStatus::Unknown};  // h0 = h1 = 0 of i_*L
  CheckStatus h1_surjectivity_10{CheckStatus::Unknown};   // h1(i_*L(1,0)) = 0
  CheckStatus h1_surjectivity_1m1{CheckStatus::Unknown};  // h1(i_*L(1,-1)) = 0
  bool disjoint_asserted{false};
  Verdict verdict{Verdict::Invalid};
};

namespace detail {

inline bool all_rational(const CurveProfile& p) {
  for (const auto& c : p.components)
    if (c.genus != 0) return false;
  return true;
}

inline CheckStatus vanishing_at(const CurveSheafData& d, const Twist& t,
                                bool check_h0) {
  const CohomTable table = twisted_curve_cohomology(d, t);
  const bool ok = table.h1 == 0 && (!check_h0 || table.h0 == 0);
  return ok ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace detail

inline ElementaryReport validate_elementary(const ElementaryData& e) {
  check_degrees_match(e.curve);
  ElementaryReport rep;
  rep.disjoint_asserted = e.curve.profile.pairwise_disjoint;

  bool degrees_ok = true;
  for (std::size_t i = 0; i < e.curve.profile.components.size(); ++i)
    degrees_ok &= e.curve.degrees[i] == e.curve.profile.components[i].genus - 1;
  rep.degrees_match_genus = degrees_ok ? CheckStatus::Pass : CheckStatus::Fail;

  if (detail::all_rational(e.curve.profile)) {
    rep.untwisted_vanishing = detail::vanishing_at(e.curve, {0, 0}, true);
    rep.h1_surjectivity_10 = detail::vanishing_at(e.curve, {1, 0}, false);
    rep.h1_surjectivity_1m1 = detail::vanishing_at(e.curve, {1, -1}, false);
  }
  // positive-genus components: cohomology checks stay Unknown

  const auto failed = [](CheckStatus s) { return s == CheckStatus::Fail; };
  if (failed(rep.degrees_match_genus) || failed(rep.untwisted_vanishing) ||
      failed(rep.h1_surjectivity_10) || failed(rep.h1_surjectivity_1m1)) {
    rep.verdict = Verdict::Invalid;
  } else if (rep.untwisted_vanishing == CheckStatus::Pass &&
             rep.h1_surjectivity_10 == CheckStatus::Pass &&
             rep.h1_surjectivity_1m1 == CheckStatus::Pass &&
             e.witness == SurjectivityWitness::CatalogVerified) {
    rep.verdict = Verdict::Valid;
  } else {
    rep.verdict = Verdict::ValidByAssertion;
  }
  return rep;
}

/// Charge of the rank-0 quotient i_*L(2,-1), read in the {H^2, E^2} basis.
inline std::pair<long long, long long> quotient_charge(const CurveProfile& p) {
  const ChowClass cls = curve_class(p);
  return {to_integer(cls.cH2), to_integer(cls.cE2)};
}

/// The elementary transform: c2 grows by the curve class, everything else
/// is untouched (ch3 of the quotient vanishes), mu-stability propagates,
/// and the kernel of a surjection from a bundle is strictly torsion-free.
inline InstantonData transform_charge(const ElementaryData& e) {
  if (validate_elementary(e).verdict == Verdict::Invalid)
    throw std::invalid_argument("invalid elementary transformation data");
  const auto [dk, dl] = quotient_charge(e.curve.profile);
  InstantonData out = e.source;
  out.chern.k += dk;
  out.chern.l += dl;
  if (!e.curve.profile.components.empty()) out.strictly_torsion_free = true;
  return out;
}

struct TrajectoryStep {
  InstantonData state;
  std::pair<long long, long long> quotient;  // rank-0 quotient charge
  Verdict verdict{Verdict::Invalid};
};

struct Trajectory {
  InstantonData seed;
  std::vector<TrajectoryStep> steps;
  bool ok{true};
  std::size_t failed_index{0};  // meaningful only when !ok
};

struct TransformStep {
  CurveSheafData curve;
  SurjectivityWitness witness{SurjectivityWitness::CatalogVerified};
};

inline Trajectory iterate_transforms(const InstantonData& seed,
                                     const std::vector<TransformStep>& steps) {
  Trajectory traj;
  traj.seed = seed;
  InstantonData current = seed;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ElementaryData e{steps[i].curve, current, steps[i].witness};
    const ElementaryReport rep = validate_elementary(e);
    if (rep.verdict == Verdict::Invalid) {
      traj.ok = false;
      traj.failed_index = i;
      return traj;
    }
    current = transform_charge(e);
    const auto q = quotient_charge(steps[i].curve.profile);
    if (!is_admissible_charge(current.chern.r, current.chern.k,
                              current.chern.l))
      throw std::logic_error("transform left the admissible charge region");
    traj.steps.push_back({current, q, rep.verdict});
  }
  return traj;
}

/// Seed data of a t'Hooft bundle of charge kH^2 + lE^2: Hartshorne-Serre
/// from (k-l) pulled-back lines avoiding the point plus (l+1) fiber lines.
struct THooftSeed {
  long long k{0};
  long long l{0};
  CurveProfile scheme;

  InstantonData instanton() const {
    return make_instanton(2, k, l, 0, Stability::MuStable, 0);
  }
};

inline THooftSeed thooft_seed(long long k, long long l) {
  if (k - l < 0 || l + 1 < 0 || !is_admissible_charge(2, k, l))
    throw std::invalid_argument("no t'Hooft construction for this charge");
  THooftSeed seed;
  seed.k = k;
  seed.l = l;
  for (long long i = 0; i < k - l; ++i)
    seed.scheme.components.push_back(pullback_line());
  for (long long j = 0; j < l + 1; ++j)
    seed.scheme.components.push_back(fiber_line());
  return seed;
}

}  // namespace blowup
