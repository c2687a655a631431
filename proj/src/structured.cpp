#include "gapasym/structured.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gapasym/calculus.hpp"
#include "gapasym/errors.hpp"
#include "gapasym/fredholm.hpp"
#include "gapasym/opoly.hpp"
#include "gapasym/quadrature.hpp"
#include "gapasym/specfun.hpp"

namespace gapasym::structured {

namespace {

constexpr double kPi = std::numbers::pi;

// Relative disagreement between the OP and moment routes that is reported
// as a conditioning failure.
constexpr double kCrossCheckTolerance = 1e-8;

constexpr int kMaxSmallArcOrder = 24;
constexpr double kMaxSmallArcWidth = 0.5;

void cross_check(double op_value, const LogValue& moment_value, const char* who) {
  const double scale = std::max(1.0, std::fabs(op_value));
  if (moment_value.sign != 1 || std::fabs(op_value - moment_value.log_abs) > kCrossCheckTolerance * scale)
    throw ConditioningError(std::string(who) + ": orthogonal-polynomial and moment routes disagree");
}

// ln of the leading coefficient of the orthonormal Legendre polynomial of degree k.
double log_legendre_leading(int k) {
  return 0.5 * std::log((2.0 * k + 1.0) / 2.0) + specfun::log_factorial(2L * k) - k * std::numbers::ln2 -
         2.0 * specfun::log_factorial(k);
}

// ln det of the Gram matrix int_{-1}^{1} g^j conj(g)^k dx, j, k < n, with
// g(x) = i (1 + e^{i(pi + eps x)}) / eps. The monomials are replaced by
// orthonormal Legendre polynomials in g to keep the matrix near the identity.
double log_det_smallarc_gram(int n, double eps) {
  using C = std::complex<double>;
  const int points = std::max(64, 2 * n + 32);
  const auto q = numerics::gauss_legendre(points, -1.0, 1.0);
  const std::size_t m = q.size();
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<C> basis(nn * m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = eps * q.nodes[i];
    const C g = C(std::sin(t), 2.0 * std::sin(0.5 * t) * std::sin(0.5 * t)) / eps;
    C prev = 0.0, cur = std::sqrt(0.5);
    for (int k = 0; k < n; ++k) {
      basis[static_cast<std::size_t>(k) * m + i] = cur;
      // sqrt-normalized Legendre recurrence
      const double a = std::sqrt((2.0 * k + 1.0) * (2.0 * k + 3.0)) / (k + 1.0);
      const double b = k == 0 ? 0.0 : (k / (k + 1.0)) * std::sqrt((2.0 * k + 3.0) / (2.0 * k - 1.0));
      const C next = a * g * cur - b * prev;
      prev = cur;
      cur = next;
    }
  }
  std::vector<C> gram(nn * nn);
  for (std::size_t j = 0; j < nn; ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      C s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += q.weights[i] * basis[j * m + i] * std::conj(basis[k * m + i]);
      gram[j * nn + k] = s;
      gram[k * nn + j] = std::conj(s);
    }
  }
  // Hermitian Cholesky, lower factor in place.
  double log_det = 0.0;
  for (std::size_t j = 0; j < nn; ++j) {
    double d = gram[j * nn + j].real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(gram[j * nn + k]);
    if (!(d > numerics::kMinCholeskyPivot)) throw NotPositiveDefinite(j);
    const double ljj = std::sqrt(d);
    log_det += std::log(d);
    gram[j * nn + j] = ljj;
    for (std::size_t i = j + 1; i < nn; ++i) {
      C s = gram[i * nn + j];
      for (std::size_t k = 0; k < j; ++k) s -= gram[i * nn + k] * std::conj(gram[j * nn + k]);
      gram[i * nn + j] = s / ljj;
    }
  }
  for (int k = 0; k < n; ++k) log_det -= 2.0 * log_legendre_leading(k);
  return log_det;
}

void check_orders(std::span<const int> orders, const char* who) {
  if (orders.empty()) throw InputError(std::string(who) + ": orders must be nonempty");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw InputError(std::string(who) + ": orders must be positive");
    if (i > 0 && orders[i] <= orders[i - 1]) throw InputError(std::string(who) + ": orders must be strictly increasing");
  }
}

}  // namespace

LogValue toeplitz_logdet_arc(int n, double alpha) {
  if (n < 1) throw InputError("toeplitz_logdet_arc: n must be at least 1");
  const auto sys = opoly::build_circle_system(opoly::ArcSymbol::make(alpha), n);
  const double v = sys.log_toeplitz_det(n);
  if (n <= kToeplitzCrossCheckMaxOrder) cross_check(v, toeplitz_logdet_moments(n, alpha), "toeplitz_logdet_arc");
  return LogValue::from_log(v);
}

LogValue toeplitz_logdet_smallarc(int n, double alpha) {
  if (n < 1 || n > kMaxSmallArcOrder) throw InputError("toeplitz_logdet_smallarc: n must lie in [1, 24]");
  const double eps = kPi - alpha;
  if (!(eps > 0.0 && eps <= kMaxSmallArcWidth))
    throw InputError("toeplitz_logdet_smallarc: pi - alpha must lie in (0, 0.5]");
  const double nd = n;
  return LogValue::from_log(nd * nd * std::log(eps) - nd * std::log(2.0 * kPi) + log_det_smallarc_gram(n, eps));
}

LogValue hankel_logdet_trunc(int n, double alpha) {
  if (n < 1) throw InputError("hankel_logdet_trunc: n must be at least 1");
  const auto sys = opoly::build_halfline_system(opoly::TruncatedExpWeight::make(alpha, n), n);
  const double v = sys.log_hankel_det(n);
  if (n <= kHankelCrossCheckMaxOrder) cross_check(v, hankel_logdet_moments(n, alpha), "hankel_logdet_trunc");
  return LogValue::from_log(v);
}

LogValue hankel_logdet_laguerre_full(int n) {
  if (n < 1 || n > kMaxClosedFormOrder) throw InputError("hankel_logdet_laguerre_full: n must lie in [1, 1e6]");
  const double nd = n;
  double s = -nd * nd * std::log(4.0 * nd);
  for (int k = 0; k < n; ++k) s += 2.0 * specfun::log_factorial(k);
  return LogValue::from_log(s);
}

LogValue selberg_logA(int n) {
  if (n < 1 || n > kMaxClosedFormOrder) throw InputError("selberg_logA: n must lie in [1, 1e6]");
  const double nd = n;
  double s = nd * nd * std::numbers::ln2;
  for (int k = 0; k < n; ++k) s += 3.0 * specfun::log_factorial(k) - specfun::log_factorial(n + k);
  return LogValue::from_log(s);
}

double toeplitz_smallarc_check(int n, double alpha_near_pi) {
  if (n < 1 || n > 6) throw InputError("toeplitz_smallarc_check: n must lie in [1, 6]");
  const double eps = kPi - alpha_near_pi;
  if (!(eps > 0.0 && eps <= 0.05)) throw InputError("toeplitz_smallarc_check: pi - alpha must lie in (0, 0.05]");
  return std::fabs(std::expm1(log_det_smallarc_gram(n, eps) - selberg_logA(n).log_abs));
}

double default_fd_step(double alpha) { return 1e-6 * std::max(1.0, alpha); }

IdentityCheck verify_identity_2det2(int n, double alpha, double h) {
  if (n < 2) throw InputError("verify_identity_2det2: n must be at least 2");
  if (h == 0.0) h = default_fd_step(alpha);
  if (!(h > 0.0)) throw InputError("verify_identity_2det2: h must be positive");
  if (!(alpha > h && alpha < kPi - h)) throw InputError("verify_identity_2det2: need h < alpha < pi - h");
  const double lhs =
      numerics::central_difference([n](double a) { return toeplitz_logdet_arc(n, a).log_abs; }, alpha, h);
  const auto sys = opoly::build_circle_system(opoly::ArcSymbol::make(alpha), n);
  const auto phi = sys.phi_at_edge();
  const auto dphi = sys.dphi_at_edge();
  // Real coefficients: phi_n(e^{-i alpha}) = conj(phi_n(e^{i alpha})).
  const double rhs =
      n / kPi * std::norm(phi) - 2.0 / kPi * std::real(std::conj(phi) * std::polar(1.0, alpha) * dphi);
  return {lhs, rhs, std::fabs(lhs - rhs) / std::fabs(rhs)};
}

IdentityCheck verify_identity_hankel(int n, double alpha, double h) {
  if (n < 2) throw InputError("verify_identity_hankel: n must be at least 2");
  if (h == 0.0) h = default_fd_step(alpha);
  if (!(h > 0.0)) throw InputError("verify_identity_hankel: h must be positive");
  if (!(alpha > h)) throw InputError("verify_identity_hankel: need alpha > h");
  const double lhs =
      numerics::central_difference([n](double a) { return hankel_logdet_trunc(n, a).log_abs; }, alpha, h);
  const auto sys = opoly::build_halfline_system(opoly::TruncatedExpWeight::make(alpha, n), n);
  // The scaled edge values carry sqrt(w(alpha)) each, which supplies e^(-4 n alpha).
  const auto [pn, pn1] = sys.p_at_edge_scaled();
  const auto [dpn, dpn1] = sys.dp_at_edge_scaled();
  const double ratio = std::exp(sys.log_kappa()[n - 1] - sys.log_kappa()[n]);
  const double rhs = ratio * (dpn * pn1 - pn * dpn1);
  return {lhs, rhs, std::fabs(lhs - rhs) / std::fabs(rhs)};
}

std::vector<double> ScalingSequence::abs_errors() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::fabs(values[i] - target);
  return out;
}

bool ScalingSequence::errors_strictly_decreasing() const {
  const auto e = abs_errors();
  for (std::size_t i = 1; i < e.size(); ++i)
    if (!(e[i] < e[i - 1])) return false;
  return true;
}

double scaling_alpha_sine(double s, int n) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InputError("scaling_limit_sine: s must be positive");
  if (n < 1) throw InputError("scaling_limit_sine: orders must be positive");
  const double alpha = 2.0 * s / n;
  if (!(alpha < kPi)) throw InputError("scaling_limit_sine: 2s/n must be below pi for n = " + std::to_string(n));
  return alpha;
}

double scaling_alpha_airy(double s, int n) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InputError("scaling_limit_airy: s must be positive");
  if (n < 1) throw InputError("scaling_limit_airy: orders must be positive");
  const double alpha = 1.0 - s / std::pow(2.0 * n, 2.0 / 3.0);
  if (!(alpha > 0.0)) throw InputError("scaling_limit_airy: 1 - s/(2n)^(2/3) must be positive for n = " + std::to_string(n));
  return alpha;
}

double scaling_term_sine(double s, int n) { return toeplitz_logdet_arc(n, scaling_alpha_sine(s, n)).log_abs; }

double scaling_term_airy(double s, int n) {
  const double alpha = scaling_alpha_airy(s, n);
  return hankel_logdet_trunc(n, alpha).log_abs - hankel_logdet_laguerre_full(n).log_abs;
}

double scaling_target_sine(double s) {
  fredholm::NystromConfig cfg;
  cfg.m = 2 * fredholm::default_sine_points(s);
  return fredholm::fredholm_det_sine({s}, cfg).log_det;
}

double scaling_target_airy(double s) {
  fredholm::NystromConfig cfg;
  cfg.m = 2 * fredholm::default_airy_points(s, cfg.airy_cutoff);
  return fredholm::fredholm_det_airy({s}, cfg).log_det;
}

ScalingSequence scaling_limit_sine(double s, std::span<const int> orders) {
  check_orders(orders, "scaling_limit_sine");
  ScalingSequence out;
  out.s = s;
  out.orders.assign(orders.begin(), orders.end());
  for (int n : orders) out.alphas.push_back(scaling_alpha_sine(s, n));
  for (int n : orders) out.values.push_back(scaling_term_sine(s, n));
  out.target = scaling_target_sine(s);
  return out;
}

ScalingSequence scaling_limit_airy(double s, std::span<const int> orders) {
  check_orders(orders, "scaling_limit_airy");
  ScalingSequence out;
  out.s = s;
  out.orders.assign(orders.begin(), orders.end());
  for (int n : orders) out.alphas.push_back(scaling_alpha_airy(s, n));
  for (int n : orders) out.values.push_back(scaling_term_airy(s, n));
  out.target = scaling_target_airy(s);
  return out;
}

}  // namespace gapasym::structured
