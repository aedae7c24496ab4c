#pragma once

#include <cmath>
#include <map>
#include <stdexcept>

#include "ccr/blade.hpp"
#include "ccr/rational.hpp"

namespace ccr {

// Sparse element of Cl(p,q) over a coefficient ring (exact rationals for the
// symbolic backend, doubles for the numeric one). Zero coefficients are never
// stored. Values are immutable once built; every operation is a pure
// function, so instances are safe to share across threads.
template <class Coef>
class BasicMultivector {
 public:
  explicit BasicMultivector(const Signature& sig) : sig_(sig) {}

  static BasicMultivector zero(const Signature& sig) { return BasicMultivector(sig); }

  static BasicMultivector scalar(const Signature& sig, Coef value) {
    BasicMultivector x(sig);
    x.accumulate(scalar_blade(), value);
    return x;
  }

  static BasicMultivector single(const Signature& sig, Blade b, Coef value) {
    BasicMultivector x(sig);
    x.accumulate(b, value);
    return x;
  }

  static BasicMultivector basis_vector(const Signature& sig, int slot) {
    return single(sig, generator_blade(slot), Coef(1));
  }

  const Signature& sig() const { return sig_; }
  const std::map<Blade, Coef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coef coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  // Builder entry point; keeps the sparse form canonical.
  void accumulate(Blade b, const Coef& c) {
    if (c == Coef(0)) return;
    if (!b.valid_under(sig_)) throw std::invalid_argument("blade not valid under signature");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coef(0)) terms_.erase(it);
    }
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  Signature sig_;
  std::map<Blade, Coef> terms_;
};

using Multivector = BasicMultivector<Rational>;
using NumericMultivector = BasicMultivector<double>;

template <class Coef>
void require_same_signature(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  if (!(a.sig() == b.sig()))
    throw std::invalid_argument("incompatible algebras: signatures differ");
}

template <class Coef>
BasicMultivector<Coef> operator+(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  require_same_signature(a, b);
  BasicMultivector<Coef> result(a.sig());
  for (const auto& [blade, c] : a.terms()) result.accumulate(blade, c);
  for (const auto& [blade, c] : b.terms()) result.accumulate(blade, c);
  return result;
}

template <class Coef>
BasicMultivector<Coef> operator-(const BasicMultivector<Coef>& a) {
  BasicMultivector<Coef> out(a.sig());
  for (const auto& [blade, c] : a.terms()) out.accumulate(blade, -c);
  return out;
}

template <class Coef>
BasicMultivector<Coef> operator-(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  return a + (-b);
}

template <class Coef>
BasicMultivector<Coef> operator*(const BasicMultivector<Coef>& a, const Coef& s) {
  BasicMultivector<Coef> out(a.sig());
  for (const auto& [blade, c] : a.terms()) out.accumulate(blade, c * s);
  return out;
}

template <class Coef>
BasicMultivector<Coef> operator*(const Coef& s, const BasicMultivector<Coef>& a) {
  return a * s;
}

template <class Coef>
BasicMultivector<Coef> geometric_product(const BasicMultivector<Coef>& a,
                                         const BasicMultivector<Coef>& b) {
  require_same_signature(a, b);
  BasicMultivector<Coef> out(a.sig());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      BladeProduct p = blade_product(ba, bb, a.sig());
      Coef c = ca * cb;
      out.accumulate(p.blade, p.sign < 0 ? -c : c);
    }
  }
  return out;
}

template <class Coef>
BasicMultivector<Coef> operator*(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  return geometric_product(a, b);
}

template <class Coef>
BasicMultivector<Coef> grade_project(const BasicMultivector<Coef>& x, int k) {
  if (k < 0 || k > x.sig().dimension())
    throw std::out_of_range("grade out of range for this algebra");
  BasicMultivector<Coef> out(x.sig());
  for (const auto& [blade, c] : x.terms())
    if (blade.grade() == k) out.accumulate(blade, c);
  return out;
}

// Dot and wedge are the extreme-grade parts of the blade-by-blade geometric
// product: |i-j| and i+j respectively. A grade-0 operand contributes nothing
// to the dot product (Hestenes convention); the wedge with a scalar is plain
// scaling.
template <class Coef>
BasicMultivector<Coef> dot(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  require_same_signature(a, b);
  BasicMultivector<Coef> out(a.sig());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      int ga = ba.grade(), gb = bb.grade();
      if (ga == 0 || gb == 0) continue;
      BladeProduct p = blade_product(ba, bb, a.sig());
      if (p.blade.grade() != (ga > gb ? ga - gb : gb - ga)) continue;
      Coef c = ca * cb;
      out.accumulate(p.blade, p.sign < 0 ? -c : c);
    }
  }
  return out;
}

template <class Coef>
BasicMultivector<Coef> wedge(const BasicMultivector<Coef>& a, const BasicMultivector<Coef>& b) {
  require_same_signature(a, b);
  BasicMultivector<Coef> out(a.sig());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if ((ba.mask & bb.mask) != 0) continue;  // shared factor: wedge vanishes
      BladeProduct p = blade_product(ba, bb, a.sig());
      Coef c = ca * cb;
      out.accumulate(p.blade, p.sign < 0 ? -c : c);
    }
  }
  return out;
}

// Reverse flips factor order: sign (-1)^(k(k-1)/2) on grade k.
template <class Coef>
BasicMultivector<Coef> reverse(const BasicMultivector<Coef>& x) {
  BasicMultivector<Coef> out(x.sig());
  for (const auto& [blade, c] : x.terms()) {
    int k = blade.grade();
    bool flip = ((k * (k - 1) / 2) & 1) != 0;
    out.accumulate(blade, flip ? -c : c);
  }
  return out;
}

// Negates the odd grades.
template <class Coef>
BasicMultivector<Coef> grade_involution(const BasicMultivector<Coef>& x) {
  BasicMultivector<Coef> out(x.sig());
  for (const auto& [blade, c] : x.terms())
    out.accumulate(blade, (blade.grade() & 1) ? -c : c);
  return out;
}

template <class Coef>
BasicMultivector<Coef> even_part(const BasicMultivector<Coef>& x) {
  BasicMultivector<Coef> out(x.sig());
  for (const auto& [blade, c] : x.terms())
    if ((blade.grade() & 1) == 0) out.accumulate(blade, c);
  return out;
}

template <class Coef>
BasicMultivector<Coef> odd_part(const BasicMultivector<Coef>& x) {
  BasicMultivector<Coef> out(x.sig());
  for (const auto& [blade, c] : x.terms())
    if ((blade.grade() & 1) != 0) out.accumulate(blade, c);
  return out;
}

template <class Coef>
BasicMultivector<Coef> pseudoscalar(const Signature& sig) {
  return BasicMultivector<Coef>::single(sig, pseudoscalar_blade(sig), Coef(1));
}

// I^-1 = reverse(I) / (I . reverse(I)); the normalizer is +-1 for a
// non-degenerate metric, so the inverse is +-I.
template <class Coef>
BasicMultivector<Coef> pseudoscalar_inverse(const Signature& sig) {
  Blade top = pseudoscalar_blade(sig);
  int k = top.grade();
  int rev_sign = ((k * (k - 1) / 2) & 1) ? -1 : 1;
  int norm = rev_sign * blade_product(top, top, sig).sign;  // I . reverse(I)
  return BasicMultivector<Coef>::single(sig, top, Coef(rev_sign * norm));
}

// Right multiplication by I^-1; maps grade k to grade n-k.
template <class Coef>
BasicMultivector<Coef> dual(const BasicMultivector<Coef>& x) {
  return geometric_product(x, pseudoscalar_inverse<Coef>(x.sig()));
}

inline double max_abs_coefficient(const NumericMultivector& x) {
  double best = 0.0;
  for (const auto& [blade, c] : x.terms()) best = std::max(best, std::abs(c));
  return best;
}

}  // namespace ccr
