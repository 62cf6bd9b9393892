#pragma once

#include "blowup/chow.hpp"

#include <stdexcept>

namespace blowup {

/// The line bundle O(p,q) = O(pH + qE).
struct Twist {
  long long p{0};
  long long q{0};

  bool operator==(const Twist&) const = default;
};

inline Twist operator+(const Twist& s, const Twist& t) {
  return {s.p + t.p, s.q + t.q};
}

/// chi(O(p,q)) = (1/6)((p+1)(p+2)(p+3) + q(q-1)(q-2)).
inline long long chi_line_bundle(const Twist& t) {
  const long long p = t.p, q = t.q;
  return ((p + 1) * (p + 2) * (p + 3) + q * (q - 1) * (q - 2)) / 6;
}

/// Numerical Chern data (r; c1 = aH + bE; c2 = kH^2 + lE^2; c3 = mH^3) of a
/// coherent sheaf.  m must satisfy m = k(a+4) - l(b-6) (mod 2) for the Euler
/// characteristic to be an integer; the checked constructor enforces this
/// unless told to bypass.
struct ChernData {
  long long r{0};
  long long a{0};
  long long b{0};
  long long k{0};
  long long l{0};
  long long m{0};

  bool operator==(const ChernData&) const = default;
};

inline bool is_parity_consistent(const ChernData& d) {
  const long long lhs = d.m;
  const long long rhs = d.k * (d.a + 4) - d.l * (d.b - 6);
  return ((lhs - rhs) % 2) == 0;
}

inline ChernData make_chern_data(long long r, long long a, long long b,
                                 long long k, long long l, long long m,
                                 bool allow_parity_violation = false) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  ChernData d{r, a, b, k, l, m};
  if (!allow_parity_violation && !is_parity_consistent(d))
    throw std::invalid_argument(
        "Chern data violates m = k(a+4) - l(b-6) (mod 2)");
  return d;
}

/// ch(F) = r + [aH+bE] + (1/2)[(a^2-2k)H^2 + (b^2-2l)E^2]
///           + (1/6)(a^3 + b^3 - 3ak - 3bl + 3m)[pt].
inline ChowClass chern_character(const ChernData& d) {
  const Rat a(d.a), b(d.b), k(d.k), l(d.l), m(d.m);
  return {Rat(d.r),
          a,
          b,
          (a * a - 2 * k) / 2,
          (b * b - 2 * l) / 2,
          (a * a * a + b * b * b - 3 * a * k - 3 * b * l + 3 * m) / 6};
}

/// chi(F(p,q)) evaluated by the closed Riemann-Roch expansion.  Exact
/// rational; integral precisely when the parity constraint holds.
inline Rat euler_characteristic_exact(const ChernData& d, const Twist& t) {
  const Rat r(d.r), a(d.a), b(d.b), k(d.k), l(d.l), m(d.m);
  const Rat p(t.p), q(t.q);
  const auto chi_ab =
      Rat((d.a + 1) * (d.a + 2) * (d.a + 3) + d.b * (d.b - 1) * (d.b - 2), 6);
  return r * chi_line_bundle(t) + chi_ab - 1 +
         Rat(1, 6) * (3 * m - 3 * k * (a + 4) - 3 * l * (b - 2)) +
         Rat(1, 2) *
             (a * p * (p + a + 4) + b * q * (q + b - 2) - 2 * (k * p + l * q));
}

inline long long euler_characteristic(const ChernData& d, const Twist& t) {
  const Rat chi = euler_characteristic_exact(d, t);
  if (!is_integer(chi))
    throw std::domain_error("non-integral Euler characteristic: inconsistent Chern data");
  return to_integer(chi);
}

/// F(p,q): computed by multiplying Chern characters in the Chow ring and
/// re-extracting (r,a,b,k,l,m).  For rank 2 this reduces to
/// a -> a+2p, b -> b+2q, k -> k+ap+p^2, l -> l+bq+q^2.
inline ChernData twist(const ChernData& d, const Twist& t) {
  const ChowClass ch = mul(chern_character(d), exp_divisor(Rat(t.p), Rat(t.q)));
  ChernData out;
  out.r = to_integer(ch.c0);
  out.a = to_integer(ch.cH);
  out.b = to_integer(ch.cE);
  const Rat a(out.a), b(out.b);
  out.k = to_integer(a * a / 2 - ch.cH2);
  out.l = to_integer(b * b / 2 - ch.cE2);
  out.m = to_integer((6 * ch.cPt - a * a * a - b * b * b + 3 * a * out.k +
                      3 * b * out.l) / 3);
  return out;
}

/// c(F^dual) = 1 - [aH+bE] + [kH^2+lE^2] + [mH^3] for rank-2 F.
inline ChernData dual_rank2(const ChernData& d) {
  if (d.r != 2) throw std::invalid_argument("dual_rank2 requires rank 2");
  return {2, -d.a, -d.b, d.k, d.l, d.m};
}

/// A rank-2 reflexive sheaf is locally free iff m = 0.
inline bool locally_free_verdict_reflexive_rank2(const ChernData& d) {
  if (d.r != 2)
    throw std::invalid_argument("local-freeness criterion requires rank 2");
  return d.m == 0;
}

}  // namespace blowup
