#pragma once

#include <atomic>
#include <stdexcept>

namespace blowup {

// Sign of deg(E^3). The ring relation E^3 = H^3 fixes +1; -1 is kept as a
// configuration knob so every epsilon-dependent quantity is explicit.
inline std::atomic<int>& epsilon_storage() {
  static std::atomic<int> eps{+1};
  return eps;
}

inline int epsilon() { return epsilon_storage().load(std::memory_order_relaxed); }

inline void set_epsilon(int eps) {
  if (eps != +1 && eps != -1)
    throw std::invalid_argument("epsilon must be +1 or -1");
  epsilon_storage().store(eps, std::memory_order_relaxed);
}

}  // namespace blowup
