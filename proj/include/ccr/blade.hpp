#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "ccr/signature.hpp"

namespace ccr {

// Basis blade as a generator bitmask: bit i set means generator slot i is a
// factor, factors implicitly in ascending slot order. The canonical form is
// unique (no repeated factors).
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return std::popcount(mask); }
  bool valid_under(const Signature& sig) const {
    return (mask >> sig.dimension()) == 0;
  }

  friend bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
  // Canonical order: by grade, then by mask. This is the order blades are
  // stored and printed in.
  friend bool operator<(Blade a, Blade b) {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    return a.mask < b.mask;
  }
};

inline Blade scalar_blade() { return Blade{0}; }
inline Blade generator_blade(int slot) { return Blade{1u << slot}; }
inline Blade pseudoscalar_blade(const Signature& sig) {
  return Blade{(1u << sig.dimension()) - 1u};
}

struct BladeProduct {
  int sign;     // +1 or -1 (the metric is non-degenerate)
  Blade blade;  // mask = a.mask ^ b.mask
};

// Product of two basis blades: the sign counts the transpositions needed to
// interleave the factors of b into a, times the metric sign of every
// contracted generator.
BladeProduct blade_product(Blade a, Blade b, const Signature& sig);

// "1" for the scalar blade, otherwise "e<i>^e<j>..." using the signature's
// label base.
std::string blade_name(Blade b, const Signature& sig);

}  // namespace ccr
