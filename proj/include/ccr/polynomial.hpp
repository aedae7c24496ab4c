#pragma once

#include <map>
#include <span>
#include <vector>

#include "ccr/rational.hpp"

namespace ccr {

// Exponent vector over coordinates x0..x_{n-1}.
struct Monomial {
  std::vector<unsigned> exps;

  int degree() const;
  // Canonical order: total degree first, then earlier coordinates dominate,
  // so x0 prints before x1 within a degree class.
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps == other.exps; }
};

// Sparse exact multivariate polynomial over a fixed coordinate count.
// Immutable value semantics; no zero coefficients are stored.
class Polynomial {
 public:
  explicit Polynomial(int coord_count);
  static Polynomial constant(int coord_count, Rational value);
  static Polynomial variable(int coord_count, int slot);

  int coord_count() const { return coord_count_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for the zero polynomial
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void accumulate(Monomial m, const Rational& c);

  Polynomial derivative(int slot) const;  // formal partial derivative
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coord_count_ == b.coord_count_ && a.terms_ == b.terms_;
  }

 private:
  int coord_count_;
  std::map<Monomial, Rational> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Rational& s);
Polynomial operator*(const Rational& s, const Polynomial& a);

}  // namespace ccr
