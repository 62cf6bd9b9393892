#pragma once

#include "blowup/config.hpp"
#include "blowup/rational.hpp"

namespace blowup {

/// A class in A*(X) for X the blow-up of P^3 at a point, written as
///   c0 * 1 + cH * H + cE * E + cH2 * H^2 + cE2 * E^2 + cPt * [pt],
/// where H is the pull-back hyperplane, E the exceptional plane and
/// [pt] = H^3.  The ring is Z[E,H] / (E*H, E^3 - eps*H^3); products above
/// codimension 3 are truncated.
struct ChowClass {
  Rat c0{0};
  Rat cH{0};
  Rat cE{0};
  Rat cH2{0};
  Rat cE2{0};
  Rat cPt{0};

  static ChowClass one() { return {1, 0, 0, 0, 0, 0}; }
  static ChowClass H() { return {0, 1, 0, 0, 0, 0}; }
  static ChowClass E() { return {0, 0, 1, 0, 0, 0}; }
  static ChowClass H2() { return {0, 0, 0, 1, 0, 0}; }
  static ChowClass E2() { return {0, 0, 0, 0, 1, 0}; }
  static ChowClass point() { return {0, 0, 0, 0, 0, 1}; }

  /// a*H + b*E
  static ChowClass divisor(const Rat& a, const Rat& b) {
    return {0, a, b, 0, 0, 0};
  }

  bool operator==(const ChowClass&) const = default;
};

inline ChowClass operator+(const ChowClass& x, const ChowClass& y) {
  return {x.c0 + y.c0, x.cH + y.cH, x.cE + y.cE,
          x.cH2 + y.cH2, x.cE2 + y.cE2, x.cPt + y.cPt};
}

inline ChowClass operator-(const ChowClass& x, const ChowClass& y) {
  return {x.c0 - y.c0, x.cH - y.cH, x.cE - y.cE,
          x.cH2 - y.cH2, x.cE2 - y.cE2, x.cPt - y.cPt};
}

inline ChowClass operator-(const ChowClass& x) {
  return {-x.c0, -x.cH, -x.cE, -x.cH2, -x.cE2, -x.cPt};
}

inline ChowClass operator*(const Rat& s, const ChowClass& x) {
  return {s * x.c0, s * x.cH, s * x.cE, s * x.cH2, s * x.cE2, s * x.cPt};
}

/// Ring product.  Relations: H*E = 0, H*H2 = [pt], E*E2 = eps*[pt],
/// H*E2 = E*H2 = 0.
inline ChowClass mul(const ChowClass& x, const ChowClass& y, int eps) {
  ChowClass z;
  z.c0 = x.c0 * y.c0;
  z.cH = x.c0 * y.cH + x.cH * y.c0;
  z.cE = x.c0 * y.cE + x.cE * y.c0;
  z.cH2 = x.c0 * y.cH2 + x.cH2 * y.c0 + x.cH * y.cH;
  z.cE2 = x.c0 * y.cE2 + x.cE2 * y.c0 + x.cE * y.cE;
  z.cPt = x.c0 * y.cPt + x.cPt * y.c0 + x.cH * y.cH2 + x.cH2 * y.cH +
          eps * (x.cE * y.cE2 + x.cE2 * y.cE);
  return z;
}

inline ChowClass mul(const ChowClass& x, const ChowClass& y) {
  return mul(x, y, epsilon());
}

inline ChowClass operator*(const ChowClass& x, const ChowClass& y) {
  return mul(x, y);
}

/// Coefficient of [pt]; the degree map A^3 -> Q.
inline Rat degree(const ChowClass& x) { return x.cPt; }

/// Todd class of the blow-up.  The codimension-1 part is -K/2 = 2H - E;
/// the higher coefficients are the unique ones for which
/// deg(ch(O(p,q)) * Td) recovers chi(O(p,q)) for all p, q.
inline ChowClass todd_class() {
  return {1, 2, -1, Rat(11, 6), Rat(1, 3), 1};
}

/// exp(aH + bE) truncated at codimension 3, i.e. ch of the line bundle
/// O(aH + bE).  Mixed terms die against H*E = 0, leaving
/// 1 + (aH+bE) + (a^2 H^2 + b^2 E^2)/2 + (a^3 + eps*b^3)/6 [pt].
inline ChowClass exp_divisor(const Rat& a, const Rat& b, int eps) {
  return {1, a, b, a * a / 2, b * b / 2, (a * a * a + eps * b * b * b) / 6};
}

inline ChowClass exp_divisor(const Rat& a, const Rat& b) {
  return exp_divisor(a, b, epsilon());
}

}  // namespace blowup
