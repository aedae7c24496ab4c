#include "ccr/blade.hpp"

#include <stdexcept>

namespace ccr {

BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  if (!a.valid_under(sig) || !b.valid_under(sig))
    throw std::invalid_argument("blade not valid under signature");

  // For each factor of b, count the factors of a with a strictly higher
  // slot: that is the number of adjacent swaps needed to merge the two
  // ascending factor lists.
  int swaps = 0;
  std::uint32_t hi = a.mask >> 1;
  while (hi != 0) {
    swaps += std::popcount(hi & b.mask);
    hi >>= 1;
  }
  int sign = (swaps & 1) ? -1 : 1;

  // Repeated generators contract to their metric sign.
  std::uint32_t common = a.mask & b.mask;
  while (common != 0) {
    int slot = std::countr_zero(common);
    sign *= sig.sign(slot);
    common &= common - 1;
  }
  return BladeProduct{sign, Blade{a.mask ^ b.mask}};
}

std::string blade_name(Blade b, const Signature& sig) {
  if (b.mask == 0) return "1";
  std::string out;
  int base = sig.label_base();
  for (int slot = 0; slot < sig.dimension(); ++slot) {
    if ((b.mask >> slot) & 1u) {
      if (!out.empty()) out.push_back('^');
      out.push_back('e');
      out += std::to_string(slot + base);
    }
  }
  return out;
}

}  // namespace ccr
