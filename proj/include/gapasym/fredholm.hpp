#pragma once

#include "gapasym/linalg.hpp"

namespace gapasym::fredholm {

// Gap parameter s. Sine kernel: the gap is (0, 2s). Airy kernel: the gap is
// (-s, +inf).
struct GapParams {
  double s;
};

// Largest Nystrom matrix order accepted, default rule included.
inline constexpr int kMaxNystromPoints = 4000;

struct NystromConfig {
  int m = 0;                  // quadrature points; 0 selects the default rule
  double airy_cutoff = 14.0;  // upper truncation of (-s, inf), Airy only
};

struct GapResult {
  double log_det;         // ln P, always <= 0
  NystromConfig config;   // the resolved configuration actually used
  double error_estimate;  // |ln P(m) - ln P(ceil(m/2))|, plus the tail bound for Airy
};

// sin(x - y) / (pi (x - y)); Taylor form for |x - y| < 1e-8.
double sine_kernel(double x, double y);

// (Ai(x) Ai'(y) - Ai(y) Ai'(x)) / (x - y); for |x - y| < 1e-6 the diagonal
// form Ai'(c)^2 - c Ai(c)^2 at the midpoint c. Throws DomainError outside the
// validated Airy range.
double airy_kernel(double x, double y);

// ceil(10 + 6 s) rounded up to even, and at least 16.
int default_sine_points(double s);
// ceil(40 + 4 (s + cutoff)) rounded up to even.
int default_airy_points(double s, double cutoff);

// int_T^inf K_Ai(x, x) dx, the expected number of Airy points above T.
double airy_tail_trace(double cutoff);

// The symmetrized Nystrom matrices delta_ij - sqrt(w_i) K(x_i, x_j) sqrt(w_j).
numerics::Matrix sine_operator_matrix(double s, int m);
numerics::Matrix airy_operator_matrix(double s, int m, double cutoff);

// ln det(I - K_sine) on L^2(0, 2s). Requires s > 0 and m >= max(16, 4s).
GapResult fredholm_det_sine(GapParams p, NystromConfig cfg = {});

// ln det(I - K_Airy) on L^2(-s, inf), truncated to (-s, cutoff). Requires
// 0 <= s <= 15 and 6 <= cutoff <= 20.
GapResult fredholm_det_airy(GapParams p, NystromConfig cfg = {});

}  // namespace gapasym::fredholm
