#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace blowup {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

/// Converts an exact rational known to be integral; throws otherwise.
inline long long to_integer(const Rat& x) {
  if (!is_integer(x))
    throw std::domain_error("expected an integer, got " + x.str());
  return static_cast<long long>(numerator(x));
}

inline std::string rat_to_string(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace blowup
