// Moment-matrix determinants in 100-digit arithmetic. The Toeplitz and
// Hankel moment matrices here have condition numbers far beyond 1e16, so a
// double factorization loses every digit of the small pivots.

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gapasym/errors.hpp"
#include "gapasym/linalg.hpp"
#include "gapasym/structured.hpp"

namespace gapasym::structured {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr int kMaxMomentOrder = 64;
constexpr int kMaxSeriesTerms = 10000;

// gamma(a, x) / (4n)^a for integer a, with x = 4 n alpha.
Wide scaled_lower_gamma(int a, const Wide& alpha, const Wide& x) {
  const Wide eps = std::numeric_limits<Wide>::epsilon();
  if (x < Wide(a + 1)) {
    Wide term = Wide(1) / a;
    Wide sum = term;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < eps * sum) return pow(alpha, a) * exp(-x) * sum;
    }
    throw NumericalFailure("hankel_logdet_moments: incomplete gamma series did not converge");
  }
  // Gamma(a) - Gamma(a, x), with Gamma(a, x) = (a-1)! e^-x sum_{k<a} x^k / k!.
  Wide term = 1, partial = 1, factorial = 1;
  for (int k = 1; k < a; ++k) {
    term *= x / k;
    partial += term;
    factorial *= k;
  }
  const Wide four_n = x / alpha;
  return factorial * (1 - exp(-x) * partial) / pow(four_n, a);
}

LogValue wide_log_det(const numerics::BasicSymmetricMatrix<Wide>& m, const char* who) {
  try {
    return numerics::log_det_cholesky(m);
  } catch (const NotPositiveDefinite& e) {
    throw ConditioningError(std::string(who) + ": moment matrix lost positive definiteness at order " +
                                std::to_string(e.pivot() + 1),
                            static_cast<int>(e.pivot()));
  }
}

}  // namespace

LogValue toeplitz_logdet_moments(int n, double alpha) {
  if (n < 1 || n > kMaxMomentOrder) throw InputError("toeplitz_logdet_moments: n must lie in [1, 64]");
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) throw InputError("toeplitz_logdet_moments: alpha must lie in (0, pi)");
  const Wide pi = boost::math::constants::pi<Wide>();
  const Wide a(alpha);
  std::vector<Wide> c(static_cast<std::size_t>(n));
  c[0] = 1 - a / pi;
  for (int k = 1; k < n; ++k) c[k] = -sin(k * a) / (pi * k);
  numerics::BasicSymmetricMatrix<Wide> m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) m.set(j, k, c[static_cast<std::size_t>(k - j)]);
  return wide_log_det(m, "toeplitz_logdet_moments");
}

LogValue hankel_logdet_moments(int n, double alpha) {
  if (n < 1 || n > kMaxMomentOrder) throw InputError("hankel_logdet_moments: n must lie in [1, 64]");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("hankel_logdet_moments: alpha must be positive");
  const Wide a(alpha);
  const Wide x = 4 * n * a;
  std::vector<Wide> mu(static_cast<std::size_t>(2 * n - 1));
  for (int k = 0; k < 2 * n - 1; ++k) mu[k] = scaled_lower_gamma(k + 1, a, x);
  numerics::BasicSymmetricMatrix<Wide> m(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) m.set(j, k, mu[static_cast<std::size_t>(j + k)]);
  return wide_log_det(m, "hankel_logdet_moments");
}

}  // namespace gapasym::structured
