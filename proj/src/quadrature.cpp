#include "gapasym/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gapasym/errors.hpp"

namespace gapasym::numerics {

namespace {

constexpr double kNodeTolerance = 1e-15;
constexpr int kMaxNewtonSteps = 100;

struct LegendreEval {
  double p;   // P_m(x)
  double dp;  // P_m'(x)
};

LegendreEval legendre(int m, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (m == 0) return {1.0, 0.0};
  for (int j = 2; j <= m; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  // (1 - x^2) P_m' = m (P_{m-1} - x P_m)
  return {p1, m * (p0 - x * p1) / (1.0 - x * x)};
}

}  // namespace

Quadrature gauss_legendre(int m, double lower, double upper) {
  if (m < 1) throw InputError("gauss_legendre: need at least one point");
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper))
    throw InputError("gauss_legendre: need finite lower < upper");

  std::vector<double> x(m), w(m);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    bool converged = false;
    for (int it = 0; it < kMaxNewtonSteps; ++it) {
      const LegendreEval e = legendre(m, z);
      const double dz = e.p / e.dp;
      z -= dz;
      if (std::fabs(dz) <= kNodeTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NumericalFailure("gauss_legendre: node " + std::to_string(i) + " of " + std::to_string(m) +
                             " did not converge");
    const LegendreEval e = legendre(m, z);
    const double wi = 2.0 / ((1.0 - z * z) * e.dp * e.dp);
    // z is the i-th largest root
    x[m - 1 - i] = z;
    x[i] = -z;
    w[m - 1 - i] = wi;
    w[i] = wi;
  }
  if (m % 2 == 1) x[m / 2] = 0.0;

  Quadrature q;
  q.lower = lower;
  q.upper = upper;
  q.nodes.resize(m);
  q.weights.resize(m);
  const double mid = 0.5 * (lower + upper);
  const double rad = 0.5 * (upper - lower);
  for (int i = 0; i < m; ++i) {
    q.nodes[i] = mid + rad * x[i];
    q.weights[i] = rad * w[i];
  }
  return q;
}

}  // namespace gapasym::numerics
