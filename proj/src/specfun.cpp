#include "gapasym/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gapasym/errors.hpp"

namespace gapasym::specfun {

namespace {

using ld = long double;

constexpr int kMaxSeriesTerms = 500;

// Ai(0) and -Ai'(0).
const ld kAiryC1 = 1.0L / (std::pow(3.0L, 2.0L / 3.0L) * std::tgamma(2.0L / 3.0L));
const ld kAiryC2 = 1.0L / (std::cbrt(3.0L) * std::tgamma(1.0L / 3.0L));

// Coefficients u_k, v_k of the Airy asymptotic expansions, truncated well
// past the smallest term for any |x| >= 2 we evaluate.
struct AsymptoticCoefficients {
  std::vector<double> u, v;
};

const AsymptoticCoefficients& asymptotic_coefficients() {
  static const AsymptoticCoefficients c = [] {
    AsymptoticCoefficients out;
    out.u.push_back(1.0);
    out.v.push_back(1.0);
    for (int k = 1; k <= 90; ++k) {
      const double prev = out.u.back();
      const double uk = prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
      out.u.push_back(uk);
      out.v.push_back(-(6.0 * k + 1.0) / (6.0 * k - 1.0) * uk);
    }
    return out;
  }();
  return c;
}

// Index of the smallest |c_k| zeta^-k, the optimal truncation point.
int optimal_truncation(const std::vector<double>& c, double zeta) {
  double prev = std::numeric_limits<double>::infinity();
  double term = 1.0;
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    const double t = std::fabs(c[k]) * term;
    if (t > prev || t < 1e-18) return k > 0 ? k - 1 : 0;
    prev = t;
    term /= zeta;
  }
  return static_cast<int>(c.size()) - 1;
}

}  // namespace

AiryValue airy_maclaurin(double xd) {
  const ld x = xd;
  const ld x3 = x * x * x;
  const ld eps = std::numeric_limits<ld>::epsilon();
  // f = sum a_k x^(3k), g = sum b_k x^(3k+1) solve y'' = x y.
  ld tf = 1.0L, tg = x, dtf = 0.5L * x * x, dtg = 1.0L;
  ld f = tf, g = tg, df = dtf, dg = dtg;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    tf *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
    tg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
    dtf *= x3 / ((3.0L * (k + 1)) * (3.0L * (k + 1) + 2.0L));
    dtg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
    df += dtf;
    dg += dtg;
    const bool small = std::fabs(tf) <= eps * std::fabs(f) && std::fabs(tg) <= eps * std::fabs(g) &&
                       std::fabs(dtf) <= eps * std::fabs(df) && std::fabs(dtg) <= eps * std::fabs(dg);
    if (small) break;
  }
  return {static_cast<double>(kAiryC1 * f - kAiryC2 * g), static_cast<double>(kAiryC1 * df - kAiryC2 * dg)};
}

AiryValue airy_asymptotic(double x) {
  if (!(std::fabs(x) >= 2.0)) throw DomainError("airy_asymptotic: requires |x| >= 2");
  const auto& c = asymptotic_coefficients();
  const double z = std::fabs(x);
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double z14 = std::sqrt(std::sqrt(z));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const int ku = optimal_truncation(c.u, zeta);
  const int kv = optimal_truncation(c.v, zeta);

  if (x > 0.0) {
    double su = 0.0, sv = 0.0, p = 1.0;
    for (int k = 0; k <= std::max(ku, kv); ++k) {
      const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
      if (k <= ku) su += sgn * c.u[k] * p;
      if (k <= kv) sv += sgn * c.v[k] * p;
      p /= zeta;
    }
    const double e = std::exp(-zeta) / (2.0 * sqrt_pi);
    return {e / z14 * su, -z14 * e * sv};
  }

  // Oscillatory side: even-index and odd-index partial sums.
  double pu = 0.0, qu = 0.0, pv = 0.0, qv = 0.0, p = 1.0;
  for (int k = 0; k <= std::max(ku, kv); ++k) {
    const int j = k / 2;
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    if (k <= ku) (k % 2 == 0 ? pu : qu) += sgn * c.u[k] * p;
    if (k <= kv) (k % 2 == 0 ? pv : qv) += sgn * c.v[k] * p;
    p /= zeta;
  }
  const double phase = zeta - 0.25 * std::numbers::pi;
  const double cs = std::cos(phase), sn = std::sin(phase);
  return {(cs * pu + sn * qu) / (sqrt_pi * z14), z14 / sqrt_pi * (sn * pv - cs * qv)};
}

AiryValue airy(double x) {
  if (!(x >= kAiryMin && x <= kAiryMax)) throw DomainError("airy: argument outside validated range [-15, 20]");
  if (x >= kAirySeriesLower && x <= kAirySeriesUpper) return airy_maclaurin(x);
  return airy_asymptotic(x);
}

double airy_ai(double x) { return airy(x).ai; }
double airy_ai_prime(double x) { return airy(x).ai_prime; }

double log_factorial(long k) {
  if (k < 0) throw InputError("log_factorial: negative argument");
  static const std::array<double, 257> table = [] {
    std::array<double, 257> t{};
    ld acc = 0.0L;
    t[0] = 0.0;
    for (int j = 1; j <= 256; ++j) {
      acc += std::log(static_cast<ld>(j));
      t[j] = static_cast<double>(acc);
    }
    return t;
  }();
  if (k <= 256) return table[static_cast<std::size_t>(k)];
  // ln Gamma(z) with z = k + 1
  const ld z = static_cast<ld>(k) + 1.0L;
  const ld iz = 1.0L / z, iz2 = iz * iz;
  const ld series = iz * (1.0L / 12 - iz2 * (1.0L / 360 - iz2 * (1.0L / 1260 - iz2 * (1.0L / 1680 - iz2 / 1188))));
  const ld half_log_2pi = 0.5L * std::log(2.0L * std::numbers::pi_v<ld>);
  return static_cast<double>((z - 0.5L) * std::log(z) - z + half_log_2pi + series);
}

LogValue lower_incomplete_gamma(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InputError("lower_incomplete_gamma: a must be positive");
  if (!(x >= 0.0) || !std::isfinite(x)) throw InputError("lower_incomplete_gamma: x must be nonnegative");
  if (x == 0.0) return LogValue::zero();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n <= kMaxSeriesTerms; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * eps) return LogValue::from_log(a * std::log(x) - x + std::log(sum));
    }
    throw NumericalFailure("lower_incomplete_gamma: series did not converge");
  }

  // Modified Lentz evaluation of the continued fraction for Gamma(a, x).
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxSeriesTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < eps) {
      const double lg = std::lgamma(a);
      const double log_q = -x + a * std::log(x) - lg + std::log(h);
      return LogValue::from_log(lg + std::log1p(-std::exp(log_q)));
    }
  }
  throw NumericalFailure("lower_incomplete_gamma: continued fraction did not converge");
}

double zeta_prime_two() {
  // g(x) = ln x / x^2 and g^(m)(x) = (-1)^m (m+1)! x^(-2-m) (ln x - (H_{m+1} - 1)).
  constexpr int N = 20;
  ld sum = 0.0L;
  for (int k = 2; k < N; ++k) sum += std::log(static_cast<ld>(k)) / (static_cast<ld>(k) * k);
  const ld n = N;
  const ld ln_n = std::log(n);
  sum += (ln_n + 1.0L) / n;        // tail integral
  sum += 0.5L * ln_n / (n * n);    // endpoint
  const std::array<ld, 6> bernoulli{1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730};
  ld factorial_2j = 1.0L;  // (2j)!
  ld harmonic = 1.0L;      // H_{m+1}, m = 2j - 1
  ld factorial_m1 = 1.0L;  // (m+1)!
  int m_done = 0;
  for (int j = 1; j <= 6; ++j) {
    factorial_2j *= (2.0L * j - 1.0L) * (2.0L * j);
    const int m = 2 * j - 1;
    while (m_done < m) {
      ++m_done;
      harmonic += 1.0L / (m_done + 1);
      factorial_m1 *= (m_done + 1);
    }
    // (-1)^m with m odd
    const ld deriv = -factorial_m1 * std::pow(n, -2.0L - m) * (ln_n - (harmonic - 1.0L));
    sum -= bernoulli[j - 1] / factorial_2j * deriv;
  }
  return static_cast<double>(-sum);
}

const Constants& constants() {
  static const Constants c = [] {
    const ld pi = std::numbers::pi_v<ld>;
    const ld zeta2 = pi * pi / 6.0L;
    const ld zp2 = zeta_prime_two();
    // Differentiated functional equation at s = -1, with zeta(-1) = -1/12 and
    // psi(2) = 1 - gamma.
    const ld zp_m1 = -(std::log(2.0L * pi) - 1.0L + std::numbers::egamma_v<ld> - zp2 / zeta2) / 12.0L;
    const ld ln2 = std::numbers::ln2_v<ld>;
    Constants out{};
    out.zeta_prime_minus_one = static_cast<double>(zp_m1);
    out.c0 = static_cast<double>(ln2 / 12.0L + 3.0L * zp_m1);
    out.chi_tw = static_cast<double>(ln2 / 24.0L + zp_m1);
    return out;
  }();
  return c;
}

}  // namespace gapasym::specfun
