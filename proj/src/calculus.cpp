#include "gapasym/calculus.hpp"

#include <cmath>
#include <vector>

#include "gapasym/linalg.hpp"

namespace gapasym::numerics {

double richardson_extrapolate(std::span<const StepValue> pairs, double order) {
  const std::size_t k = pairs.size();
  if (k < 2) throw InputError("richardson_extrapolate: need at least two (step, value) pairs");
  if (!(order > 0.0) || !std::isfinite(order)) throw InputError("richardson_extrapolate: order must be positive");
  for (std::size_t i = 0; i < k; ++i) {
    if (!(pairs[i].step > 0.0) || !std::isfinite(pairs[i].step) || !std::isfinite(pairs[i].value))
      throw InputError("richardson_extrapolate: steps must be positive and values finite");
    for (std::size_t j = 0; j < i; ++j)
      if (pairs[i].step == pairs[j].step) throw InputError("richardson_extrapolate: duplicate step");
  }

  // Unknowns: L, c_0 .. c_{k-2}. Steps are rescaled by the largest so the
  // system stays O(1).
  double hmax = 0.0;
  for (const auto& p : pairs) hmax = std::max(hmax, p.step);
  Matrix a(k);
  std::vector<double> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double t = pairs[i].step / hmax;
    a(i, 0) = 1.0;
    for (std::size_t j = 1; j < k; ++j) a(i, j) = std::pow(t, order + static_cast<double>(j - 1));
    rhs[i] = pairs[i].value;
  }
  return solve_linear(std::move(a), std::move(rhs))[0];
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("loglog_slope: need two or more paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] != 0.0) || !std::isfinite(y[i]))
      throw InputError("loglog_slope: x must be positive and y nonzero");
    const double lx = std::log(x[i]);
    const double ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw InputError("loglog_slope: x values must not all coincide");
  return (n * sxy - sx * sy) / den;
}

}  // namespace gapasym::numerics
