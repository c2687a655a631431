#pragma once

#include <cstddef>
#include <vector>

namespace gapasym::numerics {

struct Quadrature {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> nodes;    // strictly increasing, interior to (lower, upper)
  std::vector<double> weights;  // positive

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

// m-point Gauss-Legendre rule mapped onto (lower, upper).
//
// Nodes are Newton-refined roots of P_m started from the Chebyshev-angle
// guess cos(pi (i + 3/4) / (m + 1/2)); P_m and P_m' come from the three-term
// recurrence. Throws InputError for m < 1 or lower >= upper, and
// NumericalFailure if a root does not settle to 1e-15 within 100 steps.
Quadrature gauss_legendre(int m, double lower, double upper);

}  // namespace gapasym::numerics
