#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gapasym/errors.hpp"
#include "gapasym/log_value.hpp"

namespace gapasym::numerics {

// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  static Matrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

// Symmetric matrix whose only mutator writes both (i,j) and (j,i), so
// entry(i,j) == entry(j,i) holds bit for bit.
template <class Real>
class BasicSymmetricMatrix {
 public:
  BasicSymmetricMatrix() = default;
  explicit BasicSymmetricMatrix(std::size_t order) : order_(order), data_(order * order, Real(0)) {}

  std::size_t order() const { return order_; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, const Real& value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Real> data_;
};

using SymmetricMatrix = BasicSymmetricMatrix<double>;

// Pivots at or below this are treated as a positivity failure rather than
// as underflow.
inline constexpr double kMinCholeskyPivot = 1e-300;

// Signed log-determinant of a symmetric positive definite matrix by Cholesky
// factorization, summing log pivots in `Real`. Throws NotPositiveDefinite
// carrying the zero-based index of the first bad pivot.
//
// `Real` may be a wider floating type than double; the moment-determinant
// routes use that to survive their ill-conditioning.
template <class Real>
LogValue log_det_cholesky(const BasicSymmetricMatrix<Real>& m) {
  using std::log;
  using std::sqrt;
  const std::size_t n = m.order();
  if (n == 0) throw InputError("log_det_cholesky: empty matrix");
  std::vector<Real> l(n * n, Real(0));
  Real log_det(0);
  const Real floor(kMinCholeskyPivot);
  for (std::size_t j = 0; j < n; ++j) {
    Real d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > floor)) throw NotPositiveDefinite(j);
    const Real ljj = sqrt(d);
    l[j * n + j] = ljj;
    log_det += log(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / ljj;
    }
  }
  const double out = static_cast<double>(log_det);
  if (!std::isfinite(out)) throw NumericalFailure("log_det_cholesky: non-finite log-determinant");
  return LogValue::from_log(out, +1);
}

// Signed log-determinant by LU with partial pivoting. Sign 0 on exact
// singularity; InputError on non-finite entries.
LogValue log_det_lu(const Matrix& m);

// Solves a x = b by partial-pivoting elimination. Throws NumericalFailure on
// a singular system.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

}  // namespace gapasym::numerics
