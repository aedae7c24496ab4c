#pragma once

#include <functional>
#include <vector>

#include "ccr/field.hpp"

namespace ccr {

// Pointwise-evaluable multivector field for non-polynomial solutions.
// The evaluator must be deterministic, side-effect free and reentrant:
// grid sweeps call it from multiple threads.
class NumericField {
 public:
  using Evaluator = std::function<NumericMultivector(std::span<const double>)>;

  NumericField(const Signature& sig, Evaluator eval)
      : sig_(sig), eval_(std::move(eval)) {}

  const Signature& sig() const { return sig_; }

  NumericMultivector operator()(std::span<const double> point) const {
    return eval_(point);
  }

 private:
  Signature sig_;
  Evaluator eval_;
};

// Wraps an exact polynomial field as a numeric one.
NumericField wrap_exact(const MultivectorField& f);

// Vector derivative by second-order central differences per coordinate,
// combined with the reciprocal-frame signs. Throws std::domain_error naming
// the offending coordinate if the field evaluates to a non-finite value.
NumericMultivector numeric_vector_derivative(const NumericField& f,
                                             std::span<const double> point, double h);

using PointList = std::vector<std::vector<double>>;

// Tensor grid with `per_axis` equispaced samples of [lo, hi] on every
// coordinate.
PointList tensor_grid(const Signature& sig, double lo, double hi, int per_axis);

// Max over the sample points of the coefficient-wise max-norm of the numeric
// vector derivative. The sweep is data-parallel over points; the `_serial`
// variant is the reference implementation the parallel one is tested and
// benchmarked against.
double dirac_residual_numeric(const NumericField& f, const PointList& points, double h);
double dirac_residual_numeric_serial(const NumericField& f, const PointList& points,
                                     double h);

// Per-grade max norms of the numeric vector derivative over a sweep; entry k
// is the norm of the grade-k part. Parallel over points.
std::vector<double> numeric_residual_norms(const NumericField& f, const PointList& points,
                                           double h);

}  // namespace ccr
