#include "ccr/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ccr {

NumericField wrap_exact(const MultivectorField& f) {
  return NumericField(f.sig(), [f](std::span<const double> point) {
    return f.evaluate(point);
  });
}

namespace {

void require_finite(const NumericMultivector& value, int coordinate) {
  for (const auto& [blade, c] : value.terms()) {
    if (!std::isfinite(c))
      throw std::domain_error("non-finite field value while differentiating coordinate " +
                              std::to_string(coordinate));
  }
}

}  // namespace

NumericMultivector numeric_vector_derivative(const NumericField& f,
                                             std::span<const double> point, double h) {
  const Signature& sig = f.sig();
  if (!(h > 0)) throw std::invalid_argument("step size must be positive");
  if (point.size() != static_cast<std::size_t>(sig.dimension()))
    throw std::invalid_argument("point has wrong coordinate count");

  std::vector<double> probe(point.begin(), point.end());
  NumericMultivector out(sig);
  for (int slot = 0; slot < sig.dimension(); ++slot) {
    const double x0 = probe[static_cast<std::size_t>(slot)];
    probe[static_cast<std::size_t>(slot)] = x0 + h;
    NumericMultivector plus = f(probe);
    probe[static_cast<std::size_t>(slot)] = x0 - h;
    NumericMultivector minus = f(probe);
    probe[static_cast<std::size_t>(slot)] = x0;
    require_finite(plus, slot);
    require_finite(minus, slot);

    NumericMultivector diff = (plus - minus) * (1.0 / (2.0 * h));
    NumericMultivector frame =
        NumericMultivector::basis_vector(sig, slot) * static_cast<double>(sig.sign(slot));
    out = out + geometric_product(frame, diff);
  }
  return out;
}

PointList tensor_grid(const Signature& sig, double lo, double hi, int per_axis) {
  if (per_axis < 1) throw std::invalid_argument("grid needs at least one sample per axis");
  int n = sig.dimension();
  std::vector<double> axis(static_cast<std::size_t>(per_axis));
  for (int i = 0; i < per_axis; ++i)
    axis[static_cast<std::size_t>(i)] =
        per_axis == 1 ? (lo + hi) / 2.0 : lo + (hi - lo) * i / (per_axis - 1);

  PointList points;
  std::vector<double> current(static_cast<std::size_t>(n), 0.0);
  std::vector<int> index(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int d = 0; d < n; ++d)
      current[static_cast<std::size_t>(d)] = axis[static_cast<std::size_t>(index[d])];
    points.push_back(current);
    int d = 0;
    while (d < n && ++index[static_cast<std::size_t>(d)] == per_axis) {
      index[static_cast<std::size_t>(d)] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return points;
}

double dirac_residual_numeric_serial(const NumericField& f, const PointList& points,
                                     double h) {
  double best = 0.0;
  for (const auto& point : points)
    best = std::max(best, max_abs_coefficient(numeric_vector_derivative(f, point, h)));
  return best;
}

double dirac_residual_numeric(const NumericField& f, const PointList& points, double h) {
  double best = 0.0;
  std::atomic<bool> failed{false};
  std::exception_ptr error;

#pragma omp parallel for schedule(static) reduction(max : best)
  for (long i = 0; i < static_cast<long>(points.size()); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      double norm = max_abs_coefficient(
          numeric_vector_derivative(f, points[static_cast<std::size_t>(i)], h));
      best = std::max(best, norm);
    } catch (...) {
#pragma omp critical(ccr_numeric_error)
      {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  }

  if (failed.load()) std::rethrow_exception(error);
  return best;
}

std::vector<double> numeric_residual_norms(const NumericField& f, const PointList& points,
                                           double h) {
  int n = f.sig().dimension();
  std::vector<double> norms(static_cast<std::size_t>(n) + 1, 0.0);
  std::atomic<bool> failed{false};
  std::exception_ptr error;

#pragma omp parallel
  {
    std::vector<double> local(norms.size(), 0.0);
#pragma omp for schedule(static) nowait
    for (long i = 0; i < static_cast<long>(points.size()); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        NumericMultivector d =
            numeric_vector_derivative(f, points[static_cast<std::size_t>(i)], h);
        for (const auto& [blade, c] : d.terms()) {
          auto g = static_cast<std::size_t>(blade.grade());
          local[g] = std::max(local[g], std::abs(c));
        }
      } catch (...) {
#pragma omp critical(ccr_numeric_error)
        {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    }
#pragma omp critical(ccr_numeric_merge)
    {
      for (std::size_t g = 0; g < norms.size(); ++g)
        norms[g] = std::max(norms[g], local[g]);
    }
  }

  if (failed.load()) std::rethrow_exception(error);
  return norms;
}

}  // namespace ccr
