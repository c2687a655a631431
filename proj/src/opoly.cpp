#include "gapasym/opoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gapasym/errors.hpp"
#include "gapasym/quadrature.hpp"

namespace gapasym::opoly {

namespace {

constexpr double kPi = std::numbers::pi;

// A normalization below this (relative to the unit-norm input of the step)
// means the new direction is dominated by rounding.
constexpr double kMinNormalization = 1e-13;

// Relative agreement demanded between the Stieltjes run and its doubled grid.
constexpr double kGridAgreement = 1e-10;

struct JacobiRun {
  std::vector<double> a, b, log_kappa;
};

JacobiRun stieltjes(const TruncatedExpWeight& w, int n, int points) {
  const auto q = numerics::gauss_legendre(points, 0.0, w.alpha);
  const std::size_t m = q.size();
  std::vector<double> sqw(m);
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double wi = q.weights[i] * w(q.nodes[i]);
    mass += wi;
    sqw[i] = std::sqrt(wi);
  }
  if (!(mass > 0.0)) throw ConditioningError("build_halfline_system: weight has no mass on the grid", 0);

  JacobiRun run;
  run.b.push_back(0.0);
  run.log_kappa.push_back(-0.5 * std::log(mass));

  // basis[k] holds sqrt(w_i) p_k(x_i), orthonormal in the plain dot product.
  std::vector<std::vector<double>> basis;
  basis.reserve(static_cast<std::size_t>(n) + 1);
  {
    std::vector<double> q0(m);
    const double inv = 1.0 / std::sqrt(mass);
    for (std::size_t i = 0; i < m; ++i) q0[i] = sqw[i] * inv;
    basis.push_back(std::move(q0));
  }
  auto dot = [m](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += u[i] * v[i];
    return s;
  };

  std::vector<double> v(m);
  for (int k = 0; k < n; ++k) {
    const auto& qk = basis[k];
    for (std::size_t i = 0; i < m; ++i) v[i] = q.nodes[i] * qk[i];
    double ak = dot(v, qk);
    for (std::size_t i = 0; i < m; ++i) v[i] -= ak * qk[i];
    if (k > 0) {
      const auto& qp = basis[k - 1];
      for (std::size_t i = 0; i < m; ++i) v[i] -= run.b[k] * qp[i];
    }
    // Full re-orthogonalization; the diagonal correction belongs to a_k.
    for (int j = 0; j <= k; ++j) {
      const double c = dot(v, basis[j]);
      if (j == k) ak += c;
      for (std::size_t i = 0; i < m; ++i) v[i] -= c * basis[j][i];
    }
    const double bk = std::sqrt(dot(v, v));
    if (!(bk > kMinNormalization * w.alpha) || !std::isfinite(bk))
      throw ConditioningError("build_halfline_system: recurrence normalization lost positivity at order " +
                                  std::to_string(k + 1),
                              k);
    run.a.push_back(ak);
    run.b.push_back(bk);
    run.log_kappa.push_back(run.log_kappa.back() - std::log(bk));
    std::vector<double> next(m);
    for (std::size_t i = 0; i < m; ++i) next[i] = v[i] / bk;
    basis.push_back(std::move(next));
  }
  return run;
}

}  // namespace

ArcSymbol ArcSymbol::make(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) throw InputError("ArcSymbol: alpha must lie in (0, pi)");
  return {alpha};
}

TruncatedExpWeight TruncatedExpWeight::make(double alpha, int n) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("TruncatedExpWeight: alpha must be positive");
  if (n < 1) throw InputError("TruncatedExpWeight: n must be at least 1");
  return {alpha, n};
}

double TruncatedExpWeight::operator()(double x) const {
  return (x > 0.0 && x < alpha) ? std::exp(-4.0 * n * x) : 0.0;
}

double fourier_coeff_arc(long k, double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) throw InputError("fourier_coeff_arc: alpha must lie in (0, pi)");
  if (k == 0) return 1.0 - alpha / kPi;
  const double kd = static_cast<double>(k);
  return -std::sin(kd * alpha) / (kPi * kd);
}

// ---------------------------------------------------------------------------
// Circle

CircleOPSystem build_circle_system(ArcSymbol sym, int n, int quadrature_points) {
  sym = ArcSymbol::make(sym.alpha);
  if (n < 1 || n > kMaxCircleOrder) throw InputError("build_circle_system: order must lie in [1, 2048]");
  const double alpha = sym.alpha;
  if (quadrature_points == 0)
    quadrature_points = static_cast<int>(std::ceil(1.25 * n * (kPi - alpha) / 2.0)) + 40;
  if (quadrature_points <= n || quadrature_points > 16 * kMaxCircleOrder)
    throw InputError("build_circle_system: quadrature size out of range for the order");

  // Half-arc (alpha, pi); its mirror image contributes the complex conjugate.
  const auto q = numerics::gauss_legendre(quadrature_points, alpha, kPi);
  const std::size_t m = q.size();
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<double> zr(m), zi(m);
  for (std::size_t i = 0; i < m; ++i) {
    zr[i] = std::cos(q.nodes[i]);
    zi[i] = std::sin(q.nodes[i]);
  }

  CircleOPSystem sys;
  sys.symbol_ = sym;
  sys.order_ = n;
  sys.quadrature_points_ = quadrature_points;
  sys.hessenberg_.assign(stride * static_cast<std::size_t>(n), 0.0);
  sys.log_chi_.assign(stride, 0.0);

  // Rows of `re`/`im` hold sqrt(w_i / pi) phi_k(z_i); the inner product is
  // then the real part of the plain Hermitian dot product.
  std::vector<double> re(stride * m, 0.0), im(stride * m, 0.0);
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) mass += q.weights[i] / kPi;
  const double norm0 = std::sqrt(mass);
  for (std::size_t i = 0; i < m; ++i) re[i] = std::sqrt(q.weights[i] / kPi) / norm0;
  sys.log_chi_[0] = -std::log(norm0);

  std::vector<double> vr(m), vi(m);
  for (int k = 0; k < n; ++k) {
    const double* qr = &re[static_cast<std::size_t>(k) * m];
    const double* qi = &im[static_cast<std::size_t>(k) * m];
    for (std::size_t i = 0; i < m; ++i) {
      vr[i] = zr[i] * qr[i] - zi[i] * qi[i];
      vi[i] = zr[i] * qi[i] + zi[i] * qr[i];
    }
    double* col = &sys.hessenberg_[static_cast<std::size_t>(k) * stride];
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j <= k; ++j) {
        const double* pr = &re[static_cast<std::size_t>(j) * m];
        const double* pi = &im[static_cast<std::size_t>(j) * m];
        double c = 0.0;
        for (std::size_t i = 0; i < m; ++i) c += vr[i] * pr[i] + vi[i] * pi[i];
        col[j] += c;
        for (std::size_t i = 0; i < m; ++i) {
          vr[i] -= c * pr[i];
          vi[i] -= c * pi[i];
        }
      }
    }
    double nrm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) nrm2 += vr[i] * vr[i] + vi[i] * vi[i];
    const double hn = std::sqrt(nrm2);
    if (!(hn > kMinNormalization) || !std::isfinite(hn))
      throw ConditioningError("build_circle_system: recurrence normalization lost positivity at order " +
                                  std::to_string(k + 1),
                              k);
    col[k + 1] = hn;
    sys.log_chi_[k + 1] = sys.log_chi_[k] - std::log(hn);
    double* nr = &re[static_cast<std::size_t>(k + 1) * m];
    double* ni = &im[static_cast<std::size_t>(k + 1) * m];
    for (std::size_t i = 0; i < m; ++i) {
      nr[i] = vr[i] / hn;
      ni[i] = vi[i] / hn;
    }
  }

  sys.chi_.resize(stride);
  for (std::size_t k = 0; k < stride; ++k) sys.chi_[k] = std::exp(sys.log_chi_[k]);
  const auto edge = sys.evaluate(n, std::polar(1.0, alpha));
  sys.phi_at_edge_ = edge.first;
  sys.dphi_at_edge_ = edge.second;
  return sys;
}

double CircleOPSystem::log_toeplitz_det(int k) const {
  if (k < 1 || k > order_ + 1) throw InputError("log_toeplitz_det: order out of range");
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += log_chi_[j];
  return -2.0 * s;
}

std::pair<ComplexValue, ComplexValue> CircleOPSystem::evaluate(int k, ComplexValue z) const {
  if (k < 0 || k > order_) throw InputError("CircleOPSystem::evaluate: degree out of range");
  std::vector<ComplexValue> p(static_cast<std::size_t>(k) + 1), dp(static_cast<std::size_t>(k) + 1);
  p[0] = chi_[0];
  dp[0] = 0.0;
  for (int j = 0; j < k; ++j) {
    ComplexValue sp = z * p[j];
    ComplexValue sd = p[j] + z * dp[j];
    for (int i = 0; i <= j; ++i) {
      sp -= h(i, j) * p[i];
      sd -= h(i, j) * dp[i];
    }
    p[j + 1] = sp / h(j + 1, j);
    dp[j + 1] = sd / h(j + 1, j);
  }
  return {p[k], dp[k]};
}

std::vector<double> CircleOPSystem::coefficients(int k) const {
  if (k < 0 || k > order_) throw InputError("CircleOPSystem::coefficients: degree out of range");
  std::vector<std::vector<double>> c;
  c.push_back({chi_[0]});
  for (int j = 0; j < k; ++j) {
    std::vector<double> next(static_cast<std::size_t>(j) + 2, 0.0);
    for (int t = 0; t <= j; ++t) next[t + 1] += c[j][t];
    for (int i = 0; i <= j; ++i)
      for (int t = 0; t <= i; ++t) next[t] -= h(i, j) * c[i][t];
    for (double& v : next) v /= h(j + 1, j);
    c.push_back(std::move(next));
  }
  return c[k];
}

// ---------------------------------------------------------------------------
// Half-line

HalfLineOPSystem build_halfline_system(TruncatedExpWeight w, int n, int quadrature_points) {
  w = TruncatedExpWeight::make(w.alpha, w.n);
  if (n < 1 || n > kMaxHalfLineOrder) throw InputError("build_halfline_system: order must lie in [1, 1024]");
  if (quadrature_points == 0) quadrature_points = std::max(200, 8 * n);
  if (quadrature_points <= n || quadrature_points > 32 * kMaxHalfLineOrder)
    throw InputError("build_halfline_system: quadrature size out of range for the order");

  JacobiRun run = stieltjes(w, n, quadrature_points);
  const JacobiRun check = stieltjes(w, n, 2 * quadrature_points);
  double s1 = 0.0, s2 = 0.0;
  for (int k = 0; k <= n; ++k) {
    s1 += run.log_kappa[k];
    s2 += check.log_kappa[k];
  }
  if (!(std::fabs(s1 - s2) <= kGridAgreement * std::max(1.0, std::fabs(s1))))
    throw ConditioningError("build_halfline_system: doubled-grid check failed; discretization is not resolved", n - 1);

  HalfLineOPSystem sys;
  sys.weight_ = w;
  sys.order_ = n;
  sys.a_ = std::move(run.a);
  sys.b_ = std::move(run.b);
  sys.log_kappa_ = std::move(run.log_kappa);
  sys.kappa_.resize(sys.log_kappa_.size());
  for (std::size_t k = 0; k < sys.kappa_.size(); ++k) sys.kappa_[k] = std::exp(sys.log_kappa_[k]);

  // Edge values, scaled by sqrt(w(alpha)) from the start of the recurrence.
  const double x = w.alpha;
  const double scale0 = std::exp(sys.log_kappa_[0] - 2.0 * w.n * w.alpha);
  double pm = 0.0, p = scale0, dpm = 0.0, dp = 0.0;
  for (int k = 0; k < n; ++k) {
    const double pn = ((x - sys.a_[k]) * p - sys.b_[k] * pm) / sys.b_[k + 1];
    const double dpn = (p + (x - sys.a_[k]) * dp - sys.b_[k] * dpm) / sys.b_[k + 1];
    pm = p;
    p = pn;
    dpm = dp;
    dp = dpn;
  }
  sys.p_edge_scaled_ = {p, pm};
  sys.dp_edge_scaled_ = {dp, dpm};
  return sys;
}

std::pair<double, double> HalfLineOPSystem::p_at_edge() const {
  const double g = std::exp(2.0 * weight_.n * weight_.alpha);
  return {p_edge_scaled_.first * g, p_edge_scaled_.second * g};
}

std::pair<double, double> HalfLineOPSystem::dp_at_edge() const {
  const double g = std::exp(2.0 * weight_.n * weight_.alpha);
  return {dp_edge_scaled_.first * g, dp_edge_scaled_.second * g};
}

double HalfLineOPSystem::log_hankel_det(int k) const {
  if (k < 1 || k > order_ + 1) throw InputError("log_hankel_det: order out of range");
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += log_kappa_[j];
  return -2.0 * s;
}

std::pair<double, double> HalfLineOPSystem::evaluate(int k, double x) const {
  if (k < 0 || k > order_) throw InputError("HalfLineOPSystem::evaluate: degree out of range");
  double pm = 0.0, p = kappa_[0], dpm = 0.0, dp = 0.0;
  for (int j = 0; j < k; ++j) {
    const double pn = ((x - a_[j]) * p - b_[j] * pm) / b_[j + 1];
    const double dpn = (p + (x - a_[j]) * dp - b_[j] * dpm) / b_[j + 1];
    pm = p;
    p = pn;
    dpm = dp;
    dp = dpn;
  }
  return {p, dp};
}

}  // namespace gapasym::opoly
