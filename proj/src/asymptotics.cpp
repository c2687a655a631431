#include "gapasym/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "gapasym/calculus.hpp"
#include "gapasym/errors.hpp"
#include "gapasym/fredholm.hpp"
#include "gapasym/specfun.hpp"
#include "gapasym/structured.hpp"

namespace gapasym::asymptotics {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOrderSnap = 0.25;

ExpansionValue make_expansion(std::vector<std::pair<std::string, double>> terms) {
  ExpansionValue v;
  v.terms = std::move(terms);
  for (const auto& t : v.terms) v.total += t.second;
  return v;
}

void check_positive_s(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InputError(std::string(who) + ": s must be positive");
}

void check_arc(int n, double alpha, const char* who) {
  if (n < 1) throw InputError(std::string(who) + ": n must be at least 1");
  if (!(alpha > 0.0 && alpha < kPi)) throw InputError(std::string(who) + ": alpha must lie in (0, pi)");
}

void check_unit(int n, double alpha, const char* who) {
  if (n < 1) throw InputError(std::string(who) + ": n must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError(std::string(who) + ": alpha must lie in (0, 1)");
}

void check_increasing_orders(std::span<const int> orders, const char* who) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2) throw InputError(std::string(who) + ": orders must be at least 2");
    if (i > 0 && orders[i] <= orders[i - 1]) throw InputError(std::string(who) + ": orders must be strictly increasing");
  }
}

}  // namespace

double ExpansionValue::term(const std::string& label) const {
  for (const auto& t : terms)
    if (t.first == label) return t.second;
  throw InputError("ExpansionValue: no term labelled " + label);
}

ExpansionValue dyson_expansion(double s) {
  check_positive_s(s, "dyson_expansion");
  return make_expansion({{"quadratic", -0.5 * s * s},
                         {"log", -0.25 * std::log(s)},
                         {"constant", specfun::constants().c0}});
}

ExpansionValue tw_expansion(double s) {
  check_positive_s(s, "tw_expansion");
  return make_expansion({{"cubic", -s * s * s / 12.0},
                         {"log", -0.125 * std::log(s)},
                         {"constant", specfun::constants().chi_tw}});
}

ExpansionValue asf_eval(int n, double alpha) {
  check_arc(n, alpha, "asf_eval");
  const double nd = n;
  return make_expansion({{"quadratic", nd * nd * std::log(std::cos(0.5 * alpha))},
                         {"log", -0.25 * std::log(nd * std::sin(0.5 * alpha))},
                         {"constant", specfun::constants().c0}});
}

ExpansionValue intD2_eval(int n, double alpha) {
  check_unit(n, alpha, "intD2_eval");
  const double nd = n;
  return make_expansion({{"quadratic", nd * nd * (1.5 + std::log(alpha) - 2.0 * alpha + 0.5 * alpha * alpha)},
                         {"log_n", -std::log(nd) / 12.0},
                         {"edge", -0.125 * std::log1p(-alpha * alpha)},
                         {"log2", std::numbers::ln2 / 12.0},
                         {"constant", specfun::constants().zeta_prime_minus_one}});
}

double diff_rhs_eval(int n, double alpha) {
  check_arc(n, alpha, "diff_rhs_eval");
  const double nd = n;
  const double t = std::tan(0.5 * alpha);
  return -0.5 * nd * nd * t - 0.125 / t;
}

double di2_rhs_eval(int n, double alpha) {
  check_unit(n, alpha, "di2_rhs_eval");
  const double nd = n;
  return nd * nd / alpha * (1.0 - alpha) * (1.0 - alpha) + alpha / (4.0 * (1.0 - alpha * alpha));
}

double asf_derivative(int n, double alpha) {
  check_arc(n, alpha, "asf_derivative");
  const double nd = n;
  return -0.5 * nd * nd * std::tan(0.5 * alpha) - 0.125 / std::tan(0.5 * alpha);
}

double intD2_derivative(int n, double alpha) {
  check_unit(n, alpha, "intD2_derivative");
  const double nd = n;
  return nd * nd * (1.0 / alpha - 2.0 + alpha) + 0.25 * alpha / (1.0 - alpha * alpha);
}

bool ResidualSeries::magnitudes_strictly_decreasing() const {
  for (std::size_t i = 1; i < residual.size(); ++i)
    if (!(std::fabs(residual[i]) < std::fabs(residual[i - 1]))) return false;
  return true;
}

ResidualSeries make_residual_series(std::vector<double> parameter, std::vector<double> residual) {
  if (parameter.size() != residual.size()) throw InputError("make_residual_series: length mismatch");
  if (parameter.empty()) throw InputError("make_residual_series: empty series");
  ResidualSeries out;
  out.parameter = std::move(parameter);
  out.residual = std::move(residual);
  const std::size_t k = out.residual.size();
  out.extrapolated_limit = out.residual.back();
  if (k < 3) return out;

  const double d1 = out.residual[k - 2] - out.residual[k - 3];
  const double d2 = out.residual[k - 1] - out.residual[k - 2];
  const double ratio = out.parameter[k - 1] / out.parameter[k - 2];
  if (d1 == 0.0 || d2 == 0.0 || !(d1 / d2 > 1.0)) return out;
  double p = std::log(d1 / d2) / std::log(ratio);
  if (std::fabs(p - std::round(p)) < kOrderSnap) p = std::round(p);
  if (!(p > 0.0)) return out;
  out.fitted_order = p;

  std::vector<numerics::StepValue> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.push_back({1.0 / out.parameter[i], out.residual[i]});
  const double limit = numerics::richardson_extrapolate(pairs, p);
  if (std::isfinite(limit)) out.extrapolated_limit = limit;
  return out;
}

double selberg_delta(int n) {
  if (n < 2) throw InputError("selberg_delta: n must be at least 2");
  const double nd = n;
  return structured::selberg_logA(n).log_abs + nd * nd * std::numbers::ln2 - nd * std::log(2.0 * kPi) +
         0.25 * std::log(nd) - specfun::constants().c0;
}

double hankel_delta_tilde(int n) {
  if (n < 2) throw InputError("hankel_delta_tilde: n must be at least 2");
  const double nd = n;
  double sum_log_fact = 0.0;
  for (int k = 0; k < n; ++k) sum_log_fact += specfun::log_factorial(k);
  return structured::selberg_logA(n).log_abs + nd * nd * std::log(2.0 * nd) - 2.0 * sum_log_fact - 1.5 * nd * nd +
         std::log(0.5 * nd) / 12.0 - specfun::constants().zeta_prime_minus_one;
}

ResidualSeries selberg_delta_n(std::span<const int> orders) {
  check_increasing_orders(orders, "selberg_delta_n");
  std::vector<double> p, r;
  for (int n : orders) {
    p.push_back(n);
    r.push_back(selberg_delta(n));
  }
  return make_residual_series(std::move(p), std::move(r));
}

ResidualSeries hankel_delta_tilde_n(std::span<const int> orders) {
  check_increasing_orders(orders, "hankel_delta_tilde_n");
  std::vector<double> p, r;
  for (int n : orders) {
    p.push_back(n);
    r.push_back(hankel_delta_tilde(n));
  }
  return make_residual_series(std::move(p), std::move(r));
}

double recovery_residual(RecoveryKind kind, double s) {
  if (!(s >= 2.0) || !std::isfinite(s)) throw InputError("constant_recovery: s values must be at least 2");
  if (kind == RecoveryKind::dyson) return fredholm::fredholm_det_sine({s}).log_det - dyson_expansion(s).total;
  return fredholm::fredholm_det_airy({s}).log_det - tw_expansion(s).total;
}

ResidualSeries constant_recovery(RecoveryKind kind, std::span<const double> s_values) {
  for (std::size_t i = 1; i < s_values.size(); ++i)
    if (!(s_values[i] > s_values[i - 1])) throw InputError("constant_recovery: s values must be strictly increasing");
  std::vector<double> p, r;
  for (double s : s_values) {
    p.push_back(s);
    r.push_back(recovery_residual(kind, s));
  }
  return make_residual_series(std::move(p), std::move(r));
}

}  // namespace gapasym::asymptotics
