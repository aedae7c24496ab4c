#include "ccr/ccr.hpp"

#include <stdexcept>

namespace ccr {

const MultivectorField& CcrReport::residual_at_grade(int g) const {
  int n = gauss_like.sig().dimension();
  if (g < 0 || g > n) throw std::out_of_range("grade out of range for this algebra");
  if (g == 0) return gauss_like;
  if (g == n) return top;
  return chain[static_cast<std::size_t>(g - 1)];
}

MultivectorField CcrReport::total() const {
  MultivectorField sum = gauss_like;
  for (const auto& r : chain) sum = sum + r;
  return sum + top;
}

CcrReport ccr_residuals(const MultivectorField& f) {
  const Signature& sig = f.sig();
  const int n = sig.dimension();

  // div_k / curl_k of each grade component; the grade-g residual is
  // div_{g+1} + curl_{g-1}.
  std::vector<MultivectorField> div(static_cast<std::size_t>(n) + 1, MultivectorField(sig));
  std::vector<MultivectorField> curl(static_cast<std::size_t>(n) + 1, MultivectorField(sig));
  for (int k = 0; k <= n; ++k) {
    MultivectorField dk = vector_derivative(grade_project(f, k));
    if (k >= 1) div[static_cast<std::size_t>(k)] = grade_project(dk, k - 1);
    if (k <= n - 1) curl[static_cast<std::size_t>(k)] = grade_project(dk, k + 1);
  }

  CcrReport report{MultivectorField(sig), {}, MultivectorField(sig), false};
  report.gauss_like = div[1];
  report.chain.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int g = 1; g <= n - 1; ++g)
    report.chain.push_back(div[static_cast<std::size_t>(g + 1)] +
                           curl[static_cast<std::size_t>(g - 1)]);
  report.top = curl[static_cast<std::size_t>(n - 1)];

  bool all_zero = report.gauss_like.is_zero() && report.top.is_zero();
  for (const auto& r : report.chain) all_zero = all_zero && r.is_zero();
  report.monogenic = all_zero;
  return report;
}

bool is_monogenic(const MultivectorField& f) { return ccr_residuals(f).monogenic; }

HarmonicCheck harmonic_check(const MultivectorField& f) {
  MultivectorField wave = dalembertian(f);
  HarmonicCheck out;
  out.harmonic = wave.is_zero();
  if (!out.harmonic) {
    const auto& [blade, poly] = *wave.components().begin();
    out.witness = HarmonicWitness{blade, poly};
  }
  return out;
}

DualCcrComparison dual_ccr_check(const MultivectorField& f) {
  DualCcrComparison out{ccr_residuals(f), ccr_residuals(dual(f)), false};
  out.equivalent = out.primal.monogenic == out.dual_form.monogenic;
  return out;
}

MultivectorField midgrade_duality_residual(const MultivectorField& f,
                                           const MultivectorField& g) {
  const Signature& sig = f.sig();
  if (!(sig == g.sig()))
    throw std::invalid_argument("incompatible algebras: signatures differ");
  const int n = sig.dimension();
  if (n % 2 != 0)
    throw std::invalid_argument("mid-grade duality requires an even-dimensional algebra");
  const int m = n / 2 - 1;
  if (!f.pure_grade(m) || !g.pure_grade(m))
    throw std::invalid_argument("mid-grade duality expects two fields of grade n/2-1");

  MultivectorField curl_f = grade_project(vector_derivative(f), m + 1);
  MultivectorField curl_g = grade_project(vector_derivative(g), m + 1);
  return curl_f + dual(curl_g);
}

}  // namespace ccr
