#pragma once

#include <cmath>
#include <span>

#include "gapasym/errors.hpp"

namespace gapasym::numerics {

template <class F>
double central_difference(F&& f, double x, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InputError("central_difference: step must be positive");
  const double fp = f(x + h);
  const double fm = f(x - h);
  if (!std::isfinite(fp) || !std::isfinite(fm))
    throw NumericalFailure("central_difference: non-finite function value");
  return (fp - fm) / (2.0 * h);
}

struct StepValue {
  double step;
  double value;
};

// Richardson extrapolation to step -> 0 under the error model
//   v(h) = L + c0 h^p + c1 h^(p+1) + ... + c_{k-2} h^(p+k-2)
// for k supplied pairs and leading order p. Returns L.
double richardson_extrapolate(std::span<const StepValue> pairs, double order);

// Least-squares slope of log|y| against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace gapasym::numerics
