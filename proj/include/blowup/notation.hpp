#pragma once

#include "blowup/chow.hpp"
#include "blowup/cohomology.hpp"
#include "blowup/curves.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

/// Raised on malformed textual input (maps to exit code 65 in the CLI).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
}

inline long long parse_integer(const std::string& s) {
  const Rat r = parse_rational(s);
  if (!is_integer(r)) throw ParseError("expected integer, got '" + s + "'");
  return to_integer(r);
}

/// "p,q" -> (p, q)
inline std::pair<long long, long long> parse_int_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected 'a,b' pair, got '" + s + "'");
  return {parse_integer(s.substr(0, comma)),
          parse_integer(s.substr(comma + 1))};
}

/// Class notation "r + a H + b E + s H2 + t E2 + u P" with rational
/// literals p/q; omitted terms are zero.
inline ChowClass parse_chow(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  ChowClass out;
  Rat sign = 1;
  bool pending_sign = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "+" || tok == "-") {
      if (pending_sign) throw ParseError("dangling sign in '" + text + "'");
      sign = tok == "-" ? -1 : 1;
      pending_sign = true;
      continue;
    }
    Rat coeff = 1;
    std::string unit;
    if (tok == "H" || tok == "E" || tok == "H2" || tok == "E2" || tok == "P") {
      unit = tok;
    } else {
      std::string lit = tok;
      if (!lit.empty() && (lit[0] == '+' || lit[0] == '-')) {
        if (pending_sign) throw ParseError("double sign in '" + text + "'");
        if (lit[0] == '-') sign = -1;
        lit = lit.substr(1);
      }
      coeff = parse_rational(lit);
      if (i + 1 < tokens.size() &&
          (tokens[i + 1] == "H" || tokens[i + 1] == "E" ||
           tokens[i + 1] == "H2" || tokens[i + 1] == "E2" ||
           tokens[i + 1] == "P")) {
        unit = tokens[++i];
      }
    }
    coeff *= sign;
    sign = 1;
    pending_sign = false;
    if (unit.empty()) out.c0 += coeff;
    else if (unit == "H") out.cH += coeff;
    else if (unit == "E") out.cE += coeff;
    else if (unit == "H2") out.cH2 += coeff;
    else if (unit == "E2") out.cE2 += coeff;
    else out.cPt += coeff;
  }
  if (pending_sign) throw ParseError("trailing sign in '" + text + "'");
  return out;
}

inline std::string format_chow(const ChowClass& x) {
  struct Term { const Rat* coeff; const char* unit; };
  const Term terms[] = {{&x.c0, ""},    {&x.cH, "H"},   {&x.cE, "E"},
                        {&x.cH2, "H2"}, {&x.cE2, "E2"}, {&x.cPt, "P"}};
  std::string out;
  for (const auto& [coeff, unit] : terms) {
    if (*coeff == 0) continue;
    const bool negative = *coeff < 0;
    const Rat mag = negative ? Rat(-*coeff) : *coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_only = mag == 1 && unit[0] != '\0';
    if (!unit_only) out += rat_to_string(mag);
    if (unit[0] != '\0') {
      if (!unit_only) out += " ";
      out += unit;
    }
  }
  return out.empty() ? "0" : out;
}

/// "O(p,q)" or "Omega1(p,q)"
inline BundleDescriptor parse_bundle(const std::string& s) {
  const auto open = s.find('(');
  const auto close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected 'O(p,q)' or 'Omega1(p,q)', got '" + s + "'");
  const std::string head = s.substr(0, open);
  BundleDescriptor b;
  if (head == "O")
    b.kind = BundleKind::LineBundle;
  else if (head == "Omega1")
    b.kind = BundleKind::OmegaTwist;
  else
    throw ParseError("unknown bundle '" + head + "'");
  const auto [p, q] = parse_int_pair(s.substr(open + 1, close - open - 1));
  b.twist = {p, q};
  return b;
}

/// Curve literal: comma-separated items, each "P", "F", "X" (optionally
/// "*count") or a custom "(h.e.g)" triple.  Order is preserved.
inline CurveProfile parse_curve_literal(const std::string& s) {
  CurveProfile profile;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    // trim
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.pop_back();
    if (item.empty()) continue;
    if (item.front() == '(') {
      if (item.back() != ')')
        throw ParseError("malformed custom component '" + item + "'");
      std::istringstream triple(item.substr(1, item.size() - 2));
      std::string h, e, g;
      if (!std::getline(triple, h, '.') || !std::getline(triple, e, '.') ||
          !std::getline(triple, g))
        throw ParseError("custom component needs '(h.e.g)', got '" + item + "'");
      profile.components.push_back(custom_component(
          parse_integer(h), parse_integer(e), parse_integer(g)));
      continue;
    }
    long long count = 1;
    std::string tag = item;
    const auto star = item.find('*');
    if (star != std::string::npos) {
      tag = item.substr(0, star);
      count = parse_integer(item.substr(star + 1));
      if (count < 0) throw ParseError("negative multiplicity in '" + item + "'");
    }
    CurveComponent comp;
    if (tag == "P") comp = pullback_line();
    else if (tag == "F") comp = fiber_line();
    else if (tag == "X") comp = exceptional_line();
    else throw ParseError("unknown curve tag '" + tag + "'");
    for (long long i = 0; i < count; ++i) profile.components.push_back(comp);
  }
  return profile;
}

}  // namespace blowup
