#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace gapasym::opoly {

using ComplexValue = std::complex<double>;

// Largest orders accepted by the builders; storage grows like order^2.
inline constexpr int kMaxCircleOrder = 2048;
inline constexpr int kMaxHalfLineOrder = 1024;

// Indicator symbol of the arc alpha < theta < 2 pi - alpha.
struct ArcSymbol {
  double alpha;

  // Throws InputError unless 0 < alpha < pi.
  static ArcSymbol make(double alpha);
};

// Weight e^(-4 n x) on (0, alpha). `n` is the exponent scale; it is kept
// separate from the order of any polynomial system built on the weight.
struct TruncatedExpWeight {
  double alpha;
  int n;

  // Throws InputError unless alpha > 0 and n >= 1.
  static TruncatedExpWeight make(double alpha, int n);

  double operator()(double x) const;
};

// k-th Fourier coefficient of the arc symbol: 1 - alpha/pi for k = 0,
// -sin(k alpha) / (pi k) otherwise.
double fourier_coeff_arc(long k, double alpha);

/// Orthonormal polynomials phi_k(z) = chi_k z^k + ... on the unit circle
/// with weight f_alpha d theta / 2 pi, for k = 0..order.
///
/// The system is generated by Arnoldi iteration on a Gauss-Legendre
/// discretization of the arc, with the multiplication-by-z operator applied
/// to node values and full re-orthogonalization. The measure is symmetric
/// under conjugation, so inner products are real and the recurrence (and
/// every polynomial coefficient) is real by construction.
class CircleOPSystem {
 public:
  const ArcSymbol& symbol() const { return symbol_; }
  int order() const { return order_; }

  // chi_0..chi_order. chi may overflow to +inf for extreme orders; log_chi
  // does not.
  const std::vector<double>& chi() const { return chi_; }
  const std::vector<double>& log_chi() const { return log_chi_; }

  // phi_order and its z-derivative at the arc edge e^{i alpha}.
  ComplexValue phi_at_edge() const { return phi_at_edge_; }
  ComplexValue dphi_at_edge() const { return dphi_at_edge_; }

  // ln D_k(f_alpha) = -2 sum_{j<k} ln chi_j for 1 <= k <= order + 1.
  double log_toeplitz_det(int k) const;

  // phi_k(z) and phi_k'(z), by the Arnoldi recurrence.
  std::pair<ComplexValue, ComplexValue> evaluate(int k, ComplexValue z) const;

  // Coefficients of phi_k in ascending powers of z.
  std::vector<double> coefficients(int k) const;

  // Number of quadrature nodes on the half-arc (alpha, pi).
  int quadrature_points() const { return quadrature_points_; }

 private:
  friend CircleOPSystem build_circle_system(ArcSymbol, int, int);

  double h(int row, int col) const { return hessenberg_[static_cast<std::size_t>(col) * (order_ + 1) + row]; }

  ArcSymbol symbol_{};
  int order_ = 0;
  int quadrature_points_ = 0;
  std::vector<double> chi_, log_chi_;
  ComplexValue phi_at_edge_, dphi_at_edge_;
  // Column k holds z phi_k = sum_{j <= k+1} H(j, k) phi_j, k = 0..order-1.
  std::vector<double> hessenberg_;
};

// Throws InputError for n < 1 and ConditioningError if a recurrence
// normalization loses positivity. quadrature_points = 0 picks
// ceil(1.25 n (pi - alpha) / 2) + 40 nodes on the half-arc.
CircleOPSystem build_circle_system(ArcSymbol sym, int n, int quadrature_points = 0);

/// Orthonormal polynomials p_k(x) = kappa_k x^k + ... on (0, alpha) with the
/// truncated exponential weight, for k = 0..order.
///
/// Built by the discretized Stieltjes procedure: the three-term recurrence
/// coefficients come from inner products on a Gauss-Legendre rule with
/// max(200, 8 order) nodes. Node values are carried multiplied by sqrt(w) so
/// nothing overflows at large orders. Construction is repeated on a doubled
/// grid and the two log-determinants must agree.
class HalfLineOPSystem {
 public:
  const TruncatedExpWeight& weight() const { return weight_; }
  int order() const { return order_; }

  const std::vector<double>& kappa() const { return kappa_; }
  const std::vector<double>& log_kappa() const { return log_kappa_; }

  // {p_order(alpha), p_{order-1}(alpha)} and the matching x-derivatives.
  // These grow like e^{2 n alpha}; the *_scaled variants carry an extra
  // factor sqrt(w(alpha)) = e^{-2 n alpha} and stay finite.
  std::pair<double, double> p_at_edge() const;
  std::pair<double, double> dp_at_edge() const;
  std::pair<double, double> p_at_edge_scaled() const { return p_edge_scaled_; }
  std::pair<double, double> dp_at_edge_scaled() const { return dp_edge_scaled_; }

  // ln D^H_k(w) = -2 sum_{j<k} ln kappa_j for 1 <= k <= order + 1.
  double log_hankel_det(int k) const;

  // p_k(x) and p_k'(x) by the three-term recurrence.
  std::pair<double, double> evaluate(int k, double x) const;

  // Jacobi recurrence: x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}.
  const std::vector<double>& recurrence_a() const { return a_; }
  const std::vector<double>& recurrence_b() const { return b_; }

 private:
  friend HalfLineOPSystem build_halfline_system(TruncatedExpWeight, int, int);

  TruncatedExpWeight weight_{};
  int order_ = 0;
  std::vector<double> kappa_, log_kappa_;
  std::vector<double> a_, b_;  // a_0..a_{order-1}; b_0 = 0, b_1..b_order
  std::pair<double, double> p_edge_scaled_{}, dp_edge_scaled_{};
};

// quadrature_points = 0 selects max(200, 8 n).
HalfLineOPSystem build_halfline_system(TruncatedExpWeight w, int n, int quadrature_points = 0);

}  // namespace gapasym::opoly
