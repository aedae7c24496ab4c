#include "ccr/field.hpp"

#include <stdexcept>

namespace ccr {

namespace {
void require_same_signature(const MultivectorField& a, const MultivectorField& b) {
  if (!(a.sig() == b.sig()))
    throw std::invalid_argument("incompatible algebras: signatures differ");
}
}  // namespace

MultivectorField MultivectorField::constant(const Multivector& value) {
  MultivectorField f(value.sig());
  int n = value.sig().dimension();
  for (const auto& [blade, c] : value.terms())
    f.accumulate(blade, Polynomial::constant(n, c));
  return f;
}

MultivectorField MultivectorField::position_vector(const Signature& sig) {
  MultivectorField f(sig);
  for (int slot = 0; slot < sig.dimension(); ++slot)
    f.accumulate(generator_blade(slot), Polynomial::variable(sig.dimension(), slot));
  return f;
}

std::set<int> MultivectorField::grades() const {
  std::set<int> out;
  for (const auto& [blade, p] : comps_) out.insert(blade.grade());
  return out;
}

bool MultivectorField::pure_grade(int k) const {
  for (const auto& [blade, p] : comps_)
    if (blade.grade() != k) return false;
  return true;
}

void MultivectorField::accumulate(Blade b, Polynomial p) {
  if (!b.valid_under(sig_)) throw std::invalid_argument("blade not valid under signature");
  if (p.coord_count() != sig_.dimension())
    throw std::invalid_argument("polynomial coordinate count does not match signature");
  if (p.is_zero()) return;
  auto it = comps_.find(b);
  if (it == comps_.end()) {
    comps_.emplace(b, std::move(p));
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) comps_.erase(it);
}

Multivector MultivectorField::evaluate(std::span<const Rational> point) const {
  Multivector out(sig_);
  for (const auto& [blade, p] : comps_) out.accumulate(blade, p.evaluate(point));
  return out;
}

NumericMultivector MultivectorField::evaluate(std::span<const double> point) const {
  NumericMultivector out(sig_);
  for (const auto& [blade, p] : comps_) out.accumulate(blade, p.evaluate(point));
  return out;
}

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b) {
  require_same_signature(a, b);
  MultivectorField out(a.sig());
  for (const auto& [blade, p] : a.components()) out.accumulate(blade, p);
  for (const auto& [blade, p] : b.components()) out.accumulate(blade, p);
  return out;
}

MultivectorField operator-(const MultivectorField& a) {
  MultivectorField out(a.sig());
  for (const auto& [blade, p] : a.components()) out.accumulate(blade, -p);
  return out;
}

MultivectorField operator-(const MultivectorField& a, const MultivectorField& b) {
  return a + (-b);
}

MultivectorField operator*(const MultivectorField& a, const Rational& s) {
  MultivectorField out(a.sig());
  for (const auto& [blade, p] : a.components()) out.accumulate(blade, p * s);
  return out;
}

MultivectorField operator*(const Rational& s, const MultivectorField& a) { return a * s; }

MultivectorField geometric_product(const MultivectorField& a, const MultivectorField& b) {
  require_same_signature(a, b);
  MultivectorField out(a.sig());
  for (const auto& [ba, pa] : a.components()) {
    for (const auto& [bb, pb] : b.components()) {
      BladeProduct prod = blade_product(ba, bb, a.sig());
      Polynomial p = pa * pb;
      out.accumulate(prod.blade, prod.sign < 0 ? -p : std::move(p));
    }
  }
  return out;
}

MultivectorField operator*(const MultivectorField& a, const Multivector& m) {
  return geometric_product(a, MultivectorField::constant(m));
}

MultivectorField operator*(const Multivector& m, const MultivectorField& a) {
  return geometric_product(MultivectorField::constant(m), a);
}

MultivectorField grade_project(const MultivectorField& f, int k) {
  if (k < 0 || k > f.sig().dimension())
    throw std::out_of_range("grade out of range for this algebra");
  MultivectorField out(f.sig());
  for (const auto& [blade, p] : f.components())
    if (blade.grade() == k) out.accumulate(blade, p);
  return out;
}

MultivectorField even_part(const MultivectorField& f) {
  MultivectorField out(f.sig());
  for (const auto& [blade, p] : f.components())
    if ((blade.grade() & 1) == 0) out.accumulate(blade, p);
  return out;
}

MultivectorField odd_part(const MultivectorField& f) {
  MultivectorField out(f.sig());
  for (const auto& [blade, p] : f.components())
    if ((blade.grade() & 1) != 0) out.accumulate(blade, p);
  return out;
}

MultivectorField dual(const MultivectorField& f) {
  return f * pseudoscalar_inverse<Rational>(f.sig());
}

MultivectorField vector_derivative(const MultivectorField& f) {
  const Signature& sig = f.sig();
  MultivectorField out(sig);
  for (int slot = 0; slot < sig.dimension(); ++slot) {
    for (const auto& [blade, p] : f.components()) {
      Polynomial d = p.derivative(slot);
      if (d.is_zero()) continue;
      BladeProduct prod = blade_product(generator_blade(slot), blade, sig);
      int sign = sig.sign(slot) * prod.sign;
      out.accumulate(prod.blade, sign < 0 ? -d : std::move(d));
    }
  }
  return out;
}

DerivativeSplit derivative_split(const MultivectorField& f) {
  const Signature& sig = f.sig();
  int n = sig.dimension();
  DerivativeSplit out{MultivectorField(sig), MultivectorField(sig)};
  for (int k : f.grades()) {
    MultivectorField dk = vector_derivative(grade_project(f, k));
    if (k >= 1) out.div = out.div + grade_project(dk, k - 1);
    if (k <= n - 1) out.curl = out.curl + grade_project(dk, k + 1);
  }
  return out;
}

MultivectorField dalembertian(const MultivectorField& f) {
  return vector_derivative(vector_derivative(f));
}

Polynomial dalembertian(const Polynomial& p, const Signature& sig) {
  if (p.coord_count() != sig.dimension())
    throw std::invalid_argument("polynomial coordinate count does not match signature");
  Polynomial out(p.coord_count());
  for (int slot = 0; slot < sig.dimension(); ++slot) {
    Polynomial d2 = p.derivative(slot).derivative(slot);
    out = out + Rational(sig.sign(slot)) * d2;
  }
  return out;
}

}  // namespace ccr
