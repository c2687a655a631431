#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gapasym::asymptotics {

// Retained terms of an asymptotic formula, in the order the formula states
// them. Terms whose coefficients are unknown are absent rather than zero.
struct ExpansionValue {
  std::vector<std::pair<std::string, double>> terms;
  double total = 0.0;

  double term(const std::string& label) const;
};

// ln P1(s) ~ -s^2/2 - (1/4) ln s + c0.
ExpansionValue dyson_expansion(double s);

// ln P2(s) ~ -s^3/12 - (1/8) ln s + chi.
ExpansionValue tw_expansion(double s);

// ln D_n(f_alpha) ~ n^2 ln cos(alpha/2) - (1/4) ln(n sin(alpha/2)) + c0.
ExpansionValue asf_eval(int n, double alpha);

// ln D^H_n(w_alpha) - ln D^H_n(w_inf) ~ n^2 (3/2 + ln alpha - 2 alpha + alpha^2/2)
//   - (1/12) ln n - (1/8) ln(1 - alpha^2) + (1/12) ln 2 + zeta'(-1).
ExpansionValue intD2_eval(int n, double alpha);

// Main terms of the alpha-derivatives, without their error terms.
// diff: -(n^2/2) tan(alpha/2) - (1/8) cot(alpha/2), 0 < alpha < pi.
// di2: (n^2/alpha)(1 - alpha)^2 + alpha / (4 (1 - alpha^2)), 0 < alpha < 1.
double diff_rhs_eval(int n, double alpha);
double di2_rhs_eval(int n, double alpha);

// Analytic alpha-derivatives of asf_eval and intD2_eval totals.
double asf_derivative(int n, double alpha);
double intD2_derivative(int n, double alpha);

struct ResidualSeries {
  std::vector<double> parameter;
  std::vector<double> residual;
  double extrapolated_limit = 0.0;
  double fitted_order = 0.0;  // 0 when fewer than three points

  bool magnitudes_strictly_decreasing() const;
};

// Extrapolates residual(parameter) to parameter -> inf in the step
// h = 1/parameter. The leading order is estimated from the last three
// points and snapped to the nearest integer when within 0.25 of it.
ResidualSeries make_residual_series(std::vector<double> parameter, std::vector<double> residual);

// delta_n = ln A_n + n^2 ln 2 - n ln 2 pi + (1/4) ln n - c0.
double selberg_delta(int n);
// delta~_n = ln A_n + n^2 ln(2n) - 2 sum_{k<n} ln k! - (3/2) n^2 + (1/12) ln(n/2) - zeta'(-1).
double hankel_delta_tilde(int n);

// Orders strictly increasing, each >= 2.
ResidualSeries selberg_delta_n(std::span<const int> orders);
ResidualSeries hankel_delta_tilde_n(std::span<const int> orders);

enum class RecoveryKind { dyson, tracy_widom };

// Fredholm log-determinant minus the retained expansion terms, at one s >= 2.
double recovery_residual(RecoveryKind kind, double s);

// s values strictly increasing, each >= 2.
ResidualSeries constant_recovery(RecoveryKind kind, std::span<const double> s_values);

}  // namespace gapasym::asymptotics
