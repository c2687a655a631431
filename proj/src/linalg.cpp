#include "gapasym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gapasym::numerics {

Matrix Matrix::identity(std::size_t order) {
  Matrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

LogValue log_det_lu(const Matrix& input) {
  const std::size_t n = input.order();
  if (n == 0) throw InputError("log_det_lu: empty matrix");
  for (double v : input.data())
    if (!std::isfinite(v)) throw InputError("log_det_lu: non-finite entry");

  Matrix a = input;
  int sign = 1;
  double log_abs = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > best) {
        best = std::fabs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return LogValue::zero();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    const double pivot = a(k, k);
    if (pivot < 0.0) sign = -sign;
    log_abs += std::log(std::fabs(pivot));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return LogValue::from_log(log_abs, sign);
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  const std::size_t n = a.order();
  if (b.size() != n) throw InputError("solve_linear: size mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) throw NumericalFailure("solve_linear: singular system");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

}  // namespace gapasym::numerics
