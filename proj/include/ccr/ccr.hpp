#pragma once

#include <optional>
#include <vector>

#include "ccr/field.hpp"

namespace ccr {

// Grade-by-grade residuals of the first-order system dF = 0. The grade-g
// part of dF couples the div of the grade-(g+1) component with the curl of
// the grade-(g-1) component; the extreme grades each see only one term.
//
//   gauss_like : grade 0, div of the grade-1 part
//   chain[g-1] : grade g residual, g = 1..n-1
//   top        : grade n, curl of the grade-(n-1) part
//
// The residuals are fields, not norms, so vanishing is decidable exactly.
struct CcrReport {
  MultivectorField gauss_like;
  std::vector<MultivectorField> chain;
  MultivectorField top;
  bool monogenic = false;

  const MultivectorField& residual_at_grade(int g) const;
  // Sums the residuals back together; equals vector_derivative of the input.
  MultivectorField total() const;
};

CcrReport ccr_residuals(const MultivectorField& f);

// True iff every residual vanishes identically, i.e. dF = 0.
bool is_monogenic(const MultivectorField& f);

// d(dF) = 0 check with a componentwise witness for the first failing
// coefficient polynomial.
struct HarmonicWitness {
  Blade blade;
  Polynomial remainder;
};
struct HarmonicCheck {
  bool harmonic = false;
  std::optional<HarmonicWitness> witness;
};
HarmonicCheck harmonic_check(const MultivectorField& f);

// Residuals of the dual-form system obtained from G = F I^-1, next to the
// primal ones. The two systems vanish together; duals are kept by explicit
// grade throughout.
struct DualCcrComparison {
  CcrReport primal;
  CcrReport dual_form;
  bool equivalent = false;  // verdicts agree
};
DualCcrComparison dual_ccr_check(const MultivectorField& f);

// Mid-grade duality residual for even n: for grade-(n/2-1) fields f and g,
// returns curl(f) + dual(curl(g)). This is the grade-n/2 chain residual when
// the grade-(n/2+1) component is reconstructed as the dual of g, using
// dot(d, dual(g)) = dual(wedge(d, g)).
MultivectorField midgrade_duality_residual(const MultivectorField& f,
                                           const MultivectorField& g);

}  // namespace ccr
