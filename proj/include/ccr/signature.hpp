#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace ccr {

// Blade bitmasks must fit one machine word.
inline constexpr int kMaxGenerators = 16;

// Metric signature of Cl(p,q): the square of each generator, +1 or -1,
// in generator order. Generators live in slots 0..n-1 internally.
//
// Printable labels follow the physics convention: when slot 0 is timelike
// (sign -1) labels start at 0, so the spacetime algebra reads e0..e3 with
// coordinates x0..x3; otherwise labels start at 1 (e1..en, x1..xn).
class Signature {
 public:
  Signature(std::initializer_list<int> signs);
  explicit Signature(std::span<const int> signs);

  // Parses a sign string such as "-+++". Throws std::invalid_argument.
  static Signature parse(std::string_view text);

  int dimension() const { return n_; }
  int sign(int slot) const;

  // First printable generator/coordinate label (0 or 1).
  int label_base() const { return signs_[0] < 0 ? 0 : 1; }

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.signs_[i] != b.signs_[i]) return false;
    return true;
  }

 private:
  void init(std::span<const int> signs);

  int n_ = 0;
  std::array<std::int8_t, kMaxGenerators> signs_{};
};

}  // namespace ccr
