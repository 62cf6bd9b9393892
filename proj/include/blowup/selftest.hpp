#pragma once

#include "blowup/blowup.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace blowup::selftest {

struct CriterionResult {
  std::string name;
  bool pass{false};
  std::string detail;  // first failure, when any
};

namespace detail {

inline CohomTable line_table(long long p, long long q) {
  return cohomology_table({BundleKind::LineBundle, {p, q}});
}

}  // namespace detail

/// Golden values from the fundamental-divisor data.
inline CriterionResult golden_chi() {
  CriterionResult r{"golden chi and h-table values", true, ""};
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok && r.pass) { r.pass = false; r.detail = what; }
  };
  expect(chi_line_bundle({0, 0}) == 1, "chi(O(0,0)) != 1");
  expect(chi_line_bundle({2, -1}) == 9, "chi(O(2,-1)) != 9");
  expect(chi_line_bundle({0, -1}) == 0, "chi(O(0,-1)) != 0");
  expect(chi_line_bundle({1, 0}) == 4, "chi(O(1,0)) != 4");
  expect(detail::line_table(2, -1) == CohomTable{9, 0, 0, 0},
         "h-table of O(2,-1) is not (9,0,0,0)");
  return r;
}

/// The nine cohomologically trivial line bundles.
inline CriterionResult trivial_rectangle() {
  CriterionResult r{"cohomologically trivial rectangle", true, ""};
  for (long long p = -3; p <= -1; ++p)
    for (long long q = 0; q <= 2; ++q)
      if (!is_cohomologically_trivial({BundleKind::LineBundle, {p, q}})) {
        r.pass = false;
        r.detail = "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
        return r;
      }
  return r;
}

/// h1 . h2 = 0 on the sweep.
inline CriterionResult h1h2_sweep() {
  CriterionResult r{"h1*h2 = 0 sweep", true, ""};
  for (long long p = -30; p <= 30; ++p)
    for (long long q = -30; q <= 30; ++q) {
      const CohomTable t = detail::line_table(p, q);
      if (t.h1 * t.h2 != 0) {
        r.pass = false;
        r.detail = "failure at (" + std::to_string(p) + "," + std::to_string(q) + ")";
        return r;
      }
    }
  return r;
}

/// table(p,q) = reverse(table(-4-p, 2-q)).
inline CriterionResult serre_symmetry() {
  CriterionResult r{"Serre-duality symmetry sweep", true, ""};
  for (long long p = -30; p <= 30; ++p)
    for (long long q = -30; q <= 30; ++q)
      if (detail::line_table(p, q) !=
          detail::line_table(-4 - p, 2 - q).reversed()) {
        r.pass = false;
        r.detail = "failure at (" + std::to_string(p) + "," + std::to_string(q) + ")";
        return r;
      }
  return r;
}

/// deg(ch * Td) against the closed chi formula, plus randomized
/// Chern-data cross-checks of the Euler-characteristic expansion.
inline CriterionResult todd_cross_oracle() {
  CriterionResult r{"Riemann-Roch cross-oracle", true, ""};
  const ChowClass td = todd_class();
  for (long long p = -10; p <= 10; ++p)
    for (long long q = -10; q <= 10; ++q)
      if (degree(mul(exp_divisor(p, q), td)) != chi_line_bundle({p, q})) {
        r.pass = false;
        r.detail = "line-bundle mismatch at (" + std::to_string(p) + "," +
                   std::to_string(q) + ")";
        return r;
      }
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long long> small(-9, 9);
  for (int trial = 0; trial < 500; ++trial) {
    const ChernData d{small(rng) < 0 ? 1 : 2 + (small(rng) & 1), small(rng),
                      small(rng),     small(rng), small(rng), small(rng)};
    const Twist t{small(rng), small(rng)};
    const Rat via_ring =
        degree(mul(mul(chern_character(d), exp_divisor(t.p, t.q)), td));
    if (via_ring != euler_characteristic_exact(d, t)) {
      r.pass = false;
      r.detail = "randomized mismatch at trial " + std::to_string(trial);
      return r;
    }
  }
  return r;
}

/// Monad term multiplicities reproduce (r, 0, charge) via ring expansion.
inline CriterionResult monad_identities() {
  CriterionResult r{"monad term identities", true, ""};
  for (long long k = 0; k <= 8; ++k)
    for (long long l = 0; l <= 8; ++l) {
      if (!is_admissible_charge(2, k, l)) continue;
      for (long long g = 0; g <= 8; ++g) {
        const InstantonData d = make_instanton(2, k, l, 0, Stability::Unknown, g);
        const ChowClass total = monad_total_character(monad_shape(d));
        const bool ok = total.c0 == 2 && total.cH == 0 && total.cE == 0 &&
                        Rat(0) - total.cH2 == k && Rat(0) - total.cE2 == l &&
                        monad_chern_check(d, monad_shape(d));
        if (!ok) {
          r.pass = false;
          r.detail = "(k,l,gamma) = (" + std::to_string(k) + "," +
                     std::to_string(l) + "," + std::to_string(g) + ")";
          return r;
        }
      }
    }
  return r;
}

/// chi(F(-2,1)) = 0 for rank-2, c1 = 0, m = 0 data.
inline CriterionResult instanton_chi_vanishing() {
  CriterionResult r{"chi(F(-2,1)) vanishing", true, ""};
  for (long long k = -20; k <= 20; ++k)
    for (long long l = -20; l <= 20; ++l) {
      const ChernData d{2, 0, 0, k, l, 0};
      if (euler_characteristic_exact(d, {-2, 1}) != 0) {
        r.pass = false;
        r.detail = "(k,l) = (" + std::to_string(k) + "," + std::to_string(l) + ")";
        return r;
      }
    }
  return r;
}

/// [pt] part of the GRR pushforward vanishes at twist (2,-1) with degree
/// g-1 on every component.
inline CriterionResult grr_quotient_check() {
  CriterionResult r{"GRR quotient point-class vanishing", true, ""};
  const std::vector<CurveComponent> catalog = {pullback_line(), fiber_line(),
                                               exceptional_line()};
  // all mixed unions of up to 5 catalog components
  std::function<bool(CurveSheafData&, std::size_t)> recurse =
      [&](CurveSheafData& data, std::size_t depth) -> bool {
    if (!data.profile.components.empty()) {
      const ChowClass push = grr_pushforward(data, {2, -1});
      if (degree(push) != 0) return false;
    }
    if (depth == 5) return true;
    for (const auto& c : catalog) {
      data.profile.components.push_back(c);
      data.degrees.push_back(c.genus - 1);
      if (!recurse(data, depth + 1)) return false;
      data.profile.components.pop_back();
      data.degrees.pop_back();
    }
    return true;
  };
  CurveSheafData data;
  if (!recurse(data, 0)) {
    r.pass = false;
    r.detail = "nonzero point coefficient for a catalog union";
  }
  return r;
}

/// Charge arithmetic of elementary transforms, single and iterated.
inline CriterionResult transform_charges() {
  CriterionResult r{"elementary transform charges", true, ""};
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok && r.pass) { r.pass = false; r.detail = what; }
  };
  for (long long k = 1; k <= 6; ++k)
    for (long long l = 0; l <= k; ++l) {
      if (!is_admissible_charge(2, k, l)) continue;
      const InstantonData seed = make_instanton(2, k, l, 0, Stability::MuStable);
      const CurveSheafData pull{{{pullback_line()}}, {-1}};
      const CurveSheafData fiber{{{fiber_line()}}, {-1}};
      const InstantonData after_p = transform_charge({pull, seed});
      const InstantonData after_f = transform_charge({fiber, seed});
      expect(after_p.chern.k == k + 1 && after_p.chern.l == l,
             "pull-back line charge rule");
      expect(after_f.chern.k == k + 1 && after_f.chern.l == l + 1,
             "fiber line charge rule");
      expect(after_p.stability == Stability::MuStable, "stability propagation");
      // concatenation: one mixed trajectory equals stepwise application
      const Trajectory traj = iterate_transforms(
          seed, {{pull}, {fiber}, {pull}});
      expect(traj.ok && traj.steps.size() == 3, "trajectory completes");
      if (traj.ok && traj.steps.size() == 3) {
        expect(traj.steps[2].state.chern.k == k + 3 &&
                   traj.steps[2].state.chern.l == l + 1,
               "concatenated charge");
        for (const auto& step : traj.steps)
          expect(is_admissible_charge(2, step.state.chern.k,
                                      step.state.chern.l),
                 "admissibility along trajectory");
      }
    }
  return r;
}

/// Deformation totals and boundary-dimension coherence.
inline CriterionResult deformation_totals() {
  CriterionResult r{"deformation dimension totals", true, ""};
  const auto expect = [&](bool ok, const std::string& what) {
    if (!ok && r.pass) { r.pass = false; r.detail = what; }
  };
  for (long long k = 1; k <= 10; ++k)
    for (long long l = 0; l <= 10; ++l) {
      if (!is_admissible_charge(2, k, l)) continue;
      const DeformationReport p = transform_deformation_report(k, l, LineTag::PullbackLine);
      const DeformationReport f = transform_deformation_report(k, l, LineTag::FiberLine);
      expect(p.ext1 == 8 * (k + 1) - 4 * l - 3, "pull-back ext1 total");
      expect(p.h0_local_ext == 5, "pull-back h0(Ext1)");
      expect(f.ext1 == 8 * k - 4 * l + 1, "fiber ext1 total");
      expect(f.h0_local_ext == 3, "fiber h0(Ext1)");
      for (const auto& rep : {p, f}) {
        expect(rep.ext1 == rep.h0_local_ext + rep.h1_hom, "ext1 additivity");
        expect(rep.smooth && rep.h1_local_ext == 0, "smoothness");
        expect(rep.ext1 == thooft_component_dimension(
                               rep.boundary_component.first,
                               rep.boundary_component.second),
               "boundary-dimension coherence");
      }
    }
  return r;
}

/// Parity predicate against integrality of the Euler characteristic, and
/// the local-freeness verdict.
inline CriterionResult parity_consistency() {
  CriterionResult r{"parity and local-freeness predicates", true, ""};
  std::mt19937 rng(550620);
  std::uniform_int_distribution<long long> small(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const ChernData d{1 + (small(rng) & 3), small(rng), small(rng),
                      small(rng), small(rng), small(rng)};
    bool all_integral = true;
    for (long long p = -5; p <= 5 && all_integral; ++p)
      for (long long q = -5; q <= 5; ++q)
        if (!is_integer(euler_characteristic_exact(d, {p, q}))) {
          all_integral = false;
          break;
        }
    if (all_integral != is_parity_consistent(d)) {
      r.pass = false;
      r.detail = "parity/integrality mismatch at trial " + std::to_string(trial);
      return r;
    }
  }
  if (!locally_free_verdict_reflexive_rank2({2, 0, 0, 1, 0, 0}) ||
      locally_free_verdict_reflexive_rank2({2, 0, 0, 1, 0, 2})) {
    r.pass = false;
    r.detail = "local-freeness verdict is not m = 0";
  }
  return r;
}

inline std::vector<CriterionResult> run_all() {
  return {golden_chi(),
          trivial_rectangle(),
          h1h2_sweep(),
          serre_symmetry(),
          todd_cross_oracle(),
          monad_identities(),
          instanton_chi_vanishing(),
          grr_quotient_check(),
          transform_charges(),
          deformation_totals(),
          parity_consistency()};
}

}  // namespace blowup::selftest
