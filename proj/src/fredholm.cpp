#include "gapasym/fredholm.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gapasym/errors.hpp"
#include "gapasym/quadrature.hpp"
#include "gapasym/specfun.hpp"

namespace gapasym::fredholm {

namespace {

constexpr double kSineSeriesRadius = 1e-8;
constexpr double kAirySeriesRadius = 1e-6;

int round_up_even(double v) {
  int m = static_cast<int>(std::ceil(v));
  return m % 2 == 0 ? m : m + 1;
}

double airy_diagonal(const specfun::AiryValue& a, double x) { return a.ai_prime * a.ai_prime - x * a.ai * a.ai; }

template <class Kernel>
numerics::Matrix assemble(const numerics::Quadrature& q, Kernel&& kernel) {
  const std::size_t m = q.size();
  std::vector<double> sw(m);
  for (std::size_t i = 0; i < m; ++i) sw[i] = std::sqrt(q.weights[i]);
  numerics::Matrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double v = (i == j ? 1.0 : 0.0) - sw[i] * kernel(i, j) * sw[j];
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

double checked_log_det(const numerics::Matrix& a) {
  const LogValue d = numerics::log_det_lu(a);
  if (d.sign != 1) throw NumericalFailure("Nystrom determinant is not positive; increase the number of points");
  return d.log_abs;
}

}  // namespace

double sine_kernel(double x, double y) {
  const double d = x - y;
  if (std::fabs(d) < kSineSeriesRadius) return (1.0 - d * d / 6.0) / std::numbers::pi;
  return std::sin(d) / (std::numbers::pi * d);
}

double airy_kernel(double x, double y) {
  const double d = x - y;
  if (std::fabs(d) < kAirySeriesRadius) {
    const double c = 0.5 * (x + y);
    return airy_diagonal(specfun::airy(c), c);
  }
  const auto ax = specfun::airy(x);
  const auto ay = specfun::airy(y);
  return (ax.ai * ay.ai_prime - ay.ai * ax.ai_prime) / d;
}

int default_sine_points(double s) { return std::max(16, round_up_even(10.0 + 6.0 * s)); }

int default_airy_points(double s, double cutoff) { return round_up_even(40.0 + 4.0 * (s + cutoff)); }

double airy_tail_trace(double cutoff) {
  const auto a = specfun::airy(cutoff);
  const double t = cutoff;
  return (2.0 * t * t * a.ai * a.ai - 2.0 * t * a.ai_prime * a.ai_prime - a.ai * a.ai_prime) / 3.0;
}

numerics::Matrix sine_operator_matrix(double s, int m) {
  const auto q = numerics::gauss_legendre(m, 0.0, 2.0 * s);
  return assemble(q, [&](std::size_t i, std::size_t j) { return sine_kernel(q.nodes[i], q.nodes[j]); });
}

numerics::Matrix airy_operator_matrix(double s, int m, double cutoff) {
  const auto q = numerics::gauss_legendre(m, -s, cutoff);
  std::vector<specfun::AiryValue> a(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) a[i] = specfun::airy(q.nodes[i]);
  return assemble(q, [&](std::size_t i, std::size_t j) {
    const double xi = q.nodes[i], xj = q.nodes[j];
    if (std::fabs(xi - xj) < kAirySeriesRadius) return airy_kernel(xi, xj);
    return (a[i].ai * a[j].ai_prime - a[j].ai * a[i].ai_prime) / (xi - xj);
  });
}

GapResult fredholm_det_sine(GapParams p, NystromConfig cfg) {
  if (!(p.s > 0.0) || !std::isfinite(p.s)) throw InputError("fredholm_det_sine: s must be positive");
  if (cfg.m == 0) cfg.m = default_sine_points(p.s);
  if (p.s > kMaxNystromPoints / 8.0) throw InputError("fredholm_det_sine: s too large for the Nystrom size limit");
  if (cfg.m > kMaxNystromPoints) throw InputError("fredholm_det_sine: m exceeds the Nystrom size limit");
  if (cfg.m < 16 || cfg.m < 4.0 * p.s)
    throw InputError("fredholm_det_sine: need m >= max(16, 4 s) to resolve the kernel");
  const double fine = checked_log_det(sine_operator_matrix(p.s, cfg.m));
  const double coarse = checked_log_det(sine_operator_matrix(p.s, (cfg.m + 1) / 2));
  if (fine > 0.0) throw NumericalFailure("fredholm_det_sine: log-determinant above zero");
  return {fine, cfg, std::fabs(fine - coarse)};
}

GapResult fredholm_det_airy(GapParams p, NystromConfig cfg) {
  if (!(p.s >= 0.0) || !std::isfinite(p.s)) throw InputError("fredholm_det_airy: s must be nonnegative");
  if (-p.s < specfun::kAiryMin) throw DomainError("fredholm_det_airy: -s below the validated Airy range");
  if (!(cfg.airy_cutoff >= 6.0)) throw InputError("fredholm_det_airy: cutoff must be at least 6");
  if (cfg.airy_cutoff > specfun::kAiryMax) throw DomainError("fredholm_det_airy: cutoff beyond the validated Airy range");
  if (cfg.m == 0) cfg.m = default_airy_points(p.s, cfg.airy_cutoff);
  if (cfg.m < 4 || cfg.m > kMaxNystromPoints) throw InputError("fredholm_det_airy: m must lie in [4, 4000]");
  const double fine = checked_log_det(airy_operator_matrix(p.s, cfg.m, cfg.airy_cutoff));
  const double coarse = checked_log_det(airy_operator_matrix(p.s, (cfg.m + 1) / 2, cfg.airy_cutoff));
  if (fine > 0.0) throw NumericalFailure("fredholm_det_airy: log-determinant above zero");
  return {fine, cfg, std::fabs(fine - coarse) + airy_tail_trace(cfg.airy_cutoff)};
}

}  // namespace gapasym::fredholm
