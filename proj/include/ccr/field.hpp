#pragma once

#include <set>

#include "ccr/multivector.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

// Multivector-valued field over coordinates x0..x_{n-1} with exact
// polynomial coefficients, one coordinate per generator. Supports exact
// differentiation; all operations are pure.
class MultivectorField {
 public:
  explicit MultivectorField(const Signature& sig) : sig_(sig) {}

  static MultivectorField zero(const Signature& sig) { return MultivectorField(sig); }

  // Field with constant coefficients.
  static MultivectorField constant(const Multivector& value);

  static MultivectorField single(const Signature& sig, Blade b, Polynomial p) {
    MultivectorField f(sig);
    f.accumulate(b, std::move(p));
    return f;
  }

  static MultivectorField scalar(const Signature& sig, Polynomial p) {
    return single(sig, scalar_blade(), std::move(p));
  }

  // x = sum_i x_i e_i
  static MultivectorField position_vector(const Signature& sig);

  const Signature& sig() const { return sig_; }
  const std::map<Blade, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Polynomial component(Blade b) const {
    auto it = comps_.find(b);
    return it == comps_.end() ? Polynomial(sig_.dimension()) : it->second;
  }

  std::set<int> grades() const;
  bool pure_grade(int k) const;  // vacuously true for the zero field

  void accumulate(Blade b, Polynomial p);

  // Pointwise value.
  Multivector evaluate(std::span<const Rational> point) const;
  NumericMultivector evaluate(std::span<const double> point) const;

  friend bool operator==(const MultivectorField& a, const MultivectorField& b) {
    return a.sig_ == b.sig_ && a.comps_ == b.comps_;
  }

 private:
  Signature sig_;
  std::map<Blade, Polynomial> comps_;
};

MultivectorField operator+(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator-(const MultivectorField& a);
MultivectorField operator-(const MultivectorField& a, const MultivectorField& b);
MultivectorField operator*(const MultivectorField& a, const Rational& s);
MultivectorField operator*(const Rational& s, const MultivectorField& a);

MultivectorField geometric_product(const MultivectorField& a, const MultivectorField& b);
// Products with constant multivectors (duals, frame vectors, ...).
MultivectorField operator*(const MultivectorField& a, const Multivector& m);
MultivectorField operator*(const Multivector& m, const MultivectorField& a);

MultivectorField grade_project(const MultivectorField& f, int k);
MultivectorField even_part(const MultivectorField& f);
MultivectorField odd_part(const MultivectorField& f);
MultivectorField dual(const MultivectorField& f);

// The vector derivative with the reciprocal frame: d = sum_i sign_i e_i d/dx_i,
// so dF = 0 reproduces the flat-space Dirac operator in any signature.
MultivectorField vector_derivative(const MultivectorField& f);

// Grade-lowering and grade-raising parts of the vector derivative, taken per
// grade component; div + curl = vector_derivative exactly. A grade-0
// component has no div part and a grade-n component has no curl part.
struct DerivativeSplit {
  MultivectorField div;
  MultivectorField curl;
};
DerivativeSplit derivative_split(const MultivectorField& f);

// d(dF): the wave operator, applied componentwise.
MultivectorField dalembertian(const MultivectorField& f);

// Scalar wave operator on one polynomial: sum_i sign_i d^2/dx_i^2.
Polynomial dalembertian(const Polynomial& p, const Signature& sig);

}  // namespace ccr
