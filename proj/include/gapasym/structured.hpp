#pragma once

#include <span>
#include <vector>

#include "gapasym/log_value.hpp"

namespace gapasym::structured {

// Orders up to which the OP routes are cross-checked against the moment
// routes on every call.
inline constexpr int kToeplitzCrossCheckMaxOrder = 12;
inline constexpr int kHankelCrossCheckMaxOrder = 10;

// Orders accepted by the product formulas.
inline constexpr int kMaxClosedFormOrder = 1000000;

// ln D_n(f_alpha) for the arc symbol, from the circle OP system. Requires
// n >= 1 and 0 < alpha < pi.
LogValue toeplitz_logdet_arc(int n, double alpha);

// ln D_n(f_alpha) by Cholesky factorization of the Toeplitz moment matrix
// in 100-digit arithmetic.
LogValue toeplitz_logdet_moments(int n, double alpha);

// ln D_n(f_alpha) for alpha close to pi by the rescaled Gram matrix of the
// arc around theta = pi. Accurate where the moment matrix is numerically
// singular; requires n <= 24 and 0 < pi - alpha <= 0.5.
LogValue toeplitz_logdet_smallarc(int n, double alpha);

// ln D^H_n(w_alpha) with the weight e^(-4 n x) on (0, alpha), from the
// half-line OP system. Requires n >= 1 and alpha > 0.
LogValue hankel_logdet_trunc(int n, double alpha);

// Same determinant from the moment matrix
//   M_jk = gamma(j + k + 1, 4 n alpha) (4 n)^-(j + k + 1)
// factorized in 100-digit arithmetic.
LogValue hankel_logdet_moments(int n, double alpha);

// ln D^H_n(w_inf) = -n^2 ln(4n) + 2 sum_{k<n} ln k!.
LogValue hankel_logdet_laguerre_full(int n);

// ln A_n, A_n = 2^(n^2) prod_{k<n} k!^3 / (n + k)!.
LogValue selberg_logA(int n);

// |D_n(f_alpha) / ((pi - alpha)^(n^2) (2 pi)^-n A_n) - 1|.
// Requires 1 <= n <= 6 and 0 < pi - alpha <= 0.05.
double toeplitz_smallarc_check(int n, double alpha_near_pi);

struct IdentityCheck {
  double lhs;          // central difference of the log-determinant in alpha
  double rhs;          // right-hand side assembled from the OP system
  double discrepancy;  // |lhs - rhs| / |rhs|
};

// 1e-6 max(1, alpha).
double default_fd_step(double alpha);

// d/d alpha ln D_n(f_alpha) against
//   (n/pi) |phi_n(e^{i alpha})|^2 - (2/pi) Re[phi_n(e^{-i alpha}) e^{i alpha} phi_n'(e^{i alpha})].
// h = 0 selects default_fd_step. Requires n >= 2 and h < alpha < pi - h.
IdentityCheck verify_identity_2det2(int n, double alpha, double h = 0.0);

// d/d alpha ln D^H_n(w_alpha) against
//   (kappa_{n-1} / kappa_n) e^(-4 n alpha) (p_n'(alpha) p_{n-1}(alpha) - p_n(alpha) p_{n-1}'(alpha)).
// Only the endpoint alpha moves; the exponent scale 4n stays fixed.
// h = 0 selects default_fd_step. Requires n >= 2 and alpha > h.
IdentityCheck verify_identity_hankel(int n, double alpha, double h = 0.0);

struct ScalingSequence {
  double s = 0.0;
  std::vector<int> orders;
  std::vector<double> alphas;
  std::vector<double> values;
  double target = 0.0;

  std::vector<double> abs_errors() const;
  bool errors_strictly_decreasing() const;
};

// Single terms of the two double-scaling sequences.
// Sine: ln D_n(f_{2s/n}); requires 2s/n < pi.
// Airy: ln D^H_n(w_alpha) - ln D^H_n(w_inf) with alpha = 1 - s/(2n)^(2/3);
// requires alpha > 0.
double scaling_alpha_sine(double s, int n);
double scaling_alpha_airy(double s, int n);
double scaling_term_sine(double s, int n);
double scaling_term_airy(double s, int n);

// The Fredholm limits at twice the default Nystrom resolution.
double scaling_target_sine(double s);
double scaling_target_airy(double s);

// Orders must be nonempty and strictly increasing.
ScalingSequence scaling_limit_sine(double s, std::span<const int> orders);
ScalingSequence scaling_limit_airy(double s, std::span<const int> orders);

}  // namespace gapasym::structured
