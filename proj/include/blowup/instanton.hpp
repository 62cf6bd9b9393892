#pragma once

#include "blowup/cohomology.hpp"
#include "blowup/curves.hpp"
#include "blowup/sheafdata.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blowup {

enum class Stability { MuStable, SemiStable, Unknown };

/// Charge admissibility for a monad presentation: 2k - l >= r and k - l >= 0.
inline bool is_admissible_charge(long long r, long long k, long long l) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  return 2 * k - l >= r && k - l >= 0;
}

/// Numerical record of a rank-r instanton sheaf: c1 = 0, charge kH^2 + lE^2.
/// gamma = h^2(F(-2,2)) is an input carried alongside; catalogued
/// constructions use gamma = 0.  The stability flag is bookkeeping only.
struct InstantonData {
  ChernData chern;
  Stability stability{Stability::Unknown};
  long long gamma{0};
  bool strictly_torsion_free{false};

  long long rank() const { return chern.r; }
  long long charge_k() const { return chern.k; }
  long long charge_l() const { return chern.l; }

  bool operator==(const InstantonData&) const = default;
};

inline InstantonData make_instanton(long long r, long long k, long long l,
                                    long long m = 0,
                                    Stability stability = Stability::Unknown,
                                    long long gamma = 0) {
  if (gamma < 0) throw std::invalid_argument("gamma must be non-negative");
  if (!is_admissible_charge(r, k, l))
    throw std::invalid_argument("inadmissible instanton charge (needs 2k-l >= r, k-l >= 0)");
  InstantonData d;
  d.chern = make_chern_data(r, 0, 0, k, l, m);
  d.stability = stability;
  d.gamma = gamma;
  return d;
}

/// Multiplicities of the six fixed monad terms
///   degree -1: O(-1,1)^(l+gamma) (+) Omega^1(0,-1)^(k-l)
///   degree  0: O(-1,1)^gamma (+) Omega^1(1,-1)^k (+) O(-1,0)^(2(k-l))
///   degree +1: O^(2k-l-r)
struct MonadShape {
  long long left_line{0};     // O(-1,1), degree -1
  long long left_omega{0};    // Omega^1(0,-1), degree -1
  long long mid_line{0};      // O(-1,1), degree 0
  long long mid_omega{0};     // Omega^1(1,-1), degree 0
  long long mid_line_b{0};    // O(-1,0), degree 0
  long long right_line{0};    // O, degree +1

  bool operator==(const MonadShape&) const = default;
};

inline MonadShape monad_shape(const InstantonData& d) {
  const long long r = d.chern.r, k = d.chern.k, l = d.chern.l, g = d.gamma;
  if (!is_admissible_charge(r, k, l))
    throw std::invalid_argument("inadmissible charge for monad");
  return {l + g, k - l, g, k, 2 * (k - l), 2 * k - l - r};
}

/// ch(M^0) - ch(M^-1) - ch(M^1), expanded in the Chow ring.
inline ChowClass monad_total_character(const MonadShape& s) {
  const ChowClass omega = omega1_chern_character();
  const ChowClass o_m11 = exp_divisor(-1, 1);
  const ChowClass left =
      s.left_line * o_m11 + s.left_omega * mul(omega, exp_divisor(0, -1));
  const ChowClass mid = s.mid_line * o_m11 +
                        s.mid_omega * mul(omega, exp_divisor(1, -1)) +
                        s.mid_line_b * exp_divisor(-1, 0);
  const ChowClass right = s.right_line * ChowClass::one();
  return mid - left - right;
}

/// The monad terms reproduce ch(F) for locally free normalization (m = 0).
inline bool monad_chern_check(const InstantonData& d, const MonadShape& s) {
  ChernData lf = d.chern;
  lf.m = 0;
  return monad_total_character(s) == chern_character(lf);
}

enum class CheckStatus { Pass, Fail, Unknown };

/// Per-item result of the instanton definition's vanishing list, evaluated
/// on externally supplied cohomology tables of the candidate sheaf.
struct ChecklistReport {
  CheckStatus h0_untwisted{CheckStatus::Unknown};   // h0(F) = 0
  CheckStatus h3_m4_1{CheckStatus::Unknown};        // h3(F(-4,1)) = 0
  CheckStatus h1_m2_1{CheckStatus::Unknown};        // h1(F(-2,1)) = 0
  CheckStatus h2_m2_1{CheckStatus::Unknown};        // h2(F(-2,1)) = 0
  CheckStatus h2_0_m1{CheckStatus::Unknown};        // h2(F(0,-1)) = 0
  CheckStatus h2_m1_1{CheckStatus::Unknown};        // h2(F(-1,1)) = 0
  CheckStatus chi_m2_1{CheckStatus::Unknown};       // chi(F(-2,1)) = 0

  bool all_pass() const {
    for (CheckStatus s : {h0_untwisted, h3_m4_1, h1_m2_1, h2_m2_1, h2_0_m1,
                          h2_m1_1, chi_m2_1})
      if (s != CheckStatus::Pass) return false;
    return true;
  }
};

using TableMap = std::map<std::pair<long long, long long>, CohomTable>;

inline ChecklistReport definition_checklist(const InstantonData& d,
                                            const TableMap& tables) {
  ChecklistReport rep;
  const auto lookup = [&](long long p, long long q) -> std::optional<CohomTable> {
    auto it = tables.find({p, q});
    if (it == tables.end()) return std::nullopt;
    return it->second;
  };
  const auto check = [](std::optional<CohomTable> t,
                        long long CohomTable::*field) {
    if (!t) return CheckStatus::Unknown;
    return (*t).*field == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  };
  rep.h0_untwisted = check(lookup(0, 0), &CohomTable::h0);
  rep.h3_m4_1 = check(lookup(-4, 1), &CohomTable::h3);
  rep.h1_m2_1 = check(lookup(-2, 1), &CohomTable::h1);
  rep.h2_m2_1 = check(lookup(-2, 1), &CohomTable::h2);
  rep.h2_0_m1 = check(lookup(0, -1), &CohomTable::h2);
  rep.h2_m1_1 = check(lookup(-1, 1), &CohomTable::h2);
  rep.chi_m2_1 = euler_characteristic_exact(d.chern, {-2, 1}) == 0
                     ? CheckStatus::Pass
                     : CheckStatus::Fail;
  return rep;
}

/// Definition of a rank-0 instanton, checked componentwise for unions of
/// rational lines: h^0 and h^1 of Q(-2,1) both vanish iff the twisted degree
/// on every component is exactly -1.
inline bool rank0_instanton_check(const CurveSheafData& d) {
  check_degrees_match(d);
  for (std::size_t i = 0; i < d.profile.components.size(); ++i) {
    const auto& c = d.profile.components[i];
    if (c.genus != 0)
      throw std::invalid_argument("rank-0 instanton check needs rational components");
    if (d.degrees[i] + restriction_degree(c, {-2, 1}) != -1) return false;
  }
  return true;
}

}  // namespace blowup
