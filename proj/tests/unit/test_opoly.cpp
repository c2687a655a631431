#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gapasym/errors.hpp"
#include "gapasym/linalg.hpp"
#include "gapasym/opoly.hpp"
#include "gapasym/quadrature.hpp"
#include "gapasym/specfun.hpp"
#include "gapasym/structured.hpp"
#include "oracles.hpp"

using namespace gapasym;
using namespace gapasym::opoly;

namespace {

constexpr double kPi = std::numbers::pi;

// (1/2 pi) int_{alpha}^{2 pi - alpha} phi_j conj(phi_k) d theta on an
// independent rule over the whole arc.
std::complex<double> circle_inner(const CircleOPSystem& sys, int j, int k, int points) {
  const double a = sys.symbol().alpha;
  const auto q = numerics::gauss_legendre(points, a, 2 * kPi - a);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto z = std::polar(1.0, q.nodes[i]);
    s += q.weights[i] * sys.evaluate(j, z).first * std::conj(sys.evaluate(k, z).first);
  }
  return s / (2 * kPi);
}

double halfline_inner(const HalfLineOPSystem& sys, int j, int k, int points) {
  const auto& w = sys.weight();
  const auto q = numerics::gauss_legendre(points, 0.0, w.alpha);
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i)
    s += q.weights[i] * w(q.nodes[i]) * sys.evaluate(j, q.nodes[i]).first * sys.evaluate(k, q.nodes[i]).first;
  return s;
}

}  // namespace

TEST_SUITE("opoly") {

TEST_CASE("fourier coefficients of the arc symbol") {
  CHECK(fourier_coeff_arc(0, 1.3) == doctest::Approx(1.0 - 1.3 / kPi).epsilon(1e-15));
  CHECK(std::fabs(fourier_coeff_arc(5, 1e-12)) <= 1e-12);
  CHECK(fourier_coeff_arc(-4, 0.9) == fourier_coeff_arc(4, 0.9));
  // Simpson's rule on the real part of e^{-3 i theta} over the supporting arc.
  const double a = 1.1;
  const double s = oracle::simpson([](double t) { return std::cos(3.0 * t); }, a, 2 * kPi - a, 2000);
  CHECK(std::fabs(s / (2 * kPi) - fourier_coeff_arc(3, a)) <= 1e-10);
  CHECK_THROWS_AS(fourier_coeff_arc(1, 0.0), InputError);
  CHECK_THROWS_AS(fourier_coeff_arc(1, kPi), InputError);
}

TEST_CASE("circle system of order one") {
  for (double a : {0.3, 1.0, 2.5}) {
    const auto sys = build_circle_system(ArcSymbol::make(a), 1);
    CHECK(sys.chi()[0] == doctest::Approx(1.0 / std::sqrt(1.0 - a / kPi)).epsilon(1e-12));
  }
}

TEST_CASE("circle orthonormality on an independent rule") {
  const auto sys = build_circle_system(ArcSymbol::make(1.2), 4);
  CHECK(std::abs(circle_inner(sys, 2, 1, 300)) <= 1e-9);
  CHECK(std::abs(circle_inner(sys, 2, 2, 300) - 1.0) <= 1e-9);
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 4; ++k)
      CHECK(std::abs(circle_inner(sys, j, k, 300) - (j == k ? 1.0 : 0.0)) <= 1e-9);
}

TEST_CASE("circle products against the double moment determinant") {
  const double a = 2.0;
  const int n = 6;
  const auto sys = build_circle_system(ArcSymbol::make(a), n);
  numerics::SymmetricMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) m.set(j, k, fourier_coeff_arc(k - j, a));
  CHECK(std::fabs(sys.log_toeplitz_det(n) - numerics::log_det_cholesky(m).log_abs) <= 1e-10);
}

TEST_CASE("circle products against the wide moment route for n <= 20") {
  for (double a : {0.5, 1.5, 2.5}) {
    const auto sys = build_circle_system(ArcSymbol::make(a), 20);
    for (int n = 1; n <= 20; ++n)
      CHECK_MESSAGE(std::fabs(sys.log_toeplitz_det(n) - structured::toeplitz_logdet_moments(n, a).log_abs) <= 1e-9,
                    "n = " << n << " alpha = " << a);
  }
}

TEST_CASE("circle system leading coefficients and reality") {
  const auto sys = build_circle_system(ArcSymbol::make(0.8), 10);
  for (double c : sys.chi()) CHECK(c > 0.0);
  const auto coeffs = sys.coefficients(10);
  REQUIRE(coeffs.size() == 11);
  CHECK(coeffs.back() == doctest::Approx(sys.chi()[10]).epsilon(1e-12));
  // Real coefficients: phi(conj z) = conj phi(z).
  const auto z = std::polar(1.0, 0.77);
  const auto v = sys.evaluate(10, z).first;
  const auto w = sys.evaluate(10, std::conj(z)).first;
  CHECK(std::abs(v - std::conj(w)) <= 1e-12 * std::abs(v));
  // Coefficients reproduce the recurrence evaluation.
  std::complex<double> horner = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) horner = horner * z + *it;
  CHECK(std::abs(horner - v) <= 1e-9 * std::abs(v));
}

TEST_CASE("circle edge values match a direct evaluation") {
  const double a = 1.4;
  const auto sys = build_circle_system(ArcSymbol::make(a), 7);
  const auto e = sys.evaluate(7, std::polar(1.0, a));
  CHECK(sys.phi_at_edge() == e.first);
  CHECK(sys.dphi_at_edge() == e.second);
  // z-derivative against a complex central difference along the circle tangent.
  const auto z = std::polar(1.0, a);
  const std::complex<double> h(0.0, 1e-6);
  const auto fd = (sys.evaluate(7, z + h).first - sys.evaluate(7, z - h).first) / (2.0 * h);
  CHECK(std::abs(fd - e.second) <= 1e-6 * std::abs(e.second));
}

TEST_CASE("circle system preconditions") {
  CHECK_THROWS_AS(ArcSymbol::make(0.0), InputError);
  CHECK_THROWS_AS(build_circle_system(ArcSymbol{1.0}, 0), InputError);
  CHECK_THROWS_AS(build_circle_system(ArcSymbol{1.0}, 5, 3), InputError);
  CHECK_THROWS_AS(build_circle_system(ArcSymbol{1.0}, kMaxCircleOrder + 1), InputError);
}

TEST_CASE("half-line system of order one") {
  for (double a : {0.2, 0.9, 3.0}) {
    const auto sys = build_halfline_system(TruncatedExpWeight::make(a, 1), 1);
    const double mass = -std::expm1(-4.0 * a) / 4.0;
    CHECK(sys.kappa()[0] == doctest::Approx(1.0 / std::sqrt(mass)).epsilon(1e-12));
  }
}

TEST_CASE("half-line orthonormality on an independent rule") {
  const auto sys = build_halfline_system(TruncatedExpWeight::make(0.8, 6), 6);
  CHECK(std::fabs(halfline_inner(sys, 3, 2, 157)) <= 1e-9);
  CHECK(std::fabs(halfline_inner(sys, 3, 3, 157) - 1.0) <= 1e-9);
}

TEST_CASE("half-line products against the double moment determinant") {
  const double a = 0.9;
  const int n = 8;
  const auto sys = build_halfline_system(TruncatedExpWeight::make(a, n), n);
  numerics::SymmetricMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      const int p = j + k + 1;
      const auto g = specfun::lower_incomplete_gamma(p, 4.0 * n * a);
      m.set(j, k, std::exp(g.log_abs - p * std::log(4.0 * n)));
    }
  CHECK(std::fabs(sys.log_hankel_det(n) - numerics::log_det_cholesky(m).log_abs) <= 1e-7);
}

TEST_CASE("half-line products against the wide moment route for n <= 10") {
  for (double a : {0.4, 0.9})
    for (int n = 1; n <= 10; ++n) {
      const auto sys = build_halfline_system(TruncatedExpWeight::make(a, n), n);
      CHECK_MESSAGE(std::fabs(sys.log_hankel_det(n) - structured::hankel_logdet_moments(n, a).log_abs) <= 1e-7,
                    "n = " << n << " alpha = " << a);
    }
}

TEST_CASE("half-line system stays finite past the moment range") {
  for (double a : {0.4, 0.9})
    for (int n = 11; n <= 40; n += 3) {
      const auto sys = build_halfline_system(TruncatedExpWeight::make(a, n), n);
      const double v = sys.log_hankel_det(n);
      CHECK(std::isfinite(v));
      for (double k : sys.kappa()) CHECK(k > 0.0);
      CHECK(std::isfinite(sys.p_at_edge_scaled().first));
    }
}

TEST_CASE("half-line edge derivatives against central differences") {
  const double a = 0.7;
  for (int n : {3, 6, 10}) {
    const auto sys = build_halfline_system(TruncatedExpWeight::make(a, n), n);
    const auto [p, p1] = sys.p_at_edge();
    const auto [dp, dp1] = sys.dp_at_edge();
    const double h = 1e-6;
    const double fd = (sys.evaluate(n, a + h).first - sys.evaluate(n, a - h).first) / (2 * h);
    const double fd1 = (sys.evaluate(n - 1, a + h).first - sys.evaluate(n - 1, a - h).first) / (2 * h);
    CHECK(std::fabs(fd / dp - 1.0) <= 1e-5);
    CHECK(std::fabs(fd1 / dp1 - 1.0) <= 1e-5);
    CHECK(sys.evaluate(n, a).first == doctest::Approx(p).epsilon(1e-10));
    CHECK(sys.evaluate(n - 1, a).first == doctest::Approx(p1).epsilon(1e-10));
    const double scale = std::exp(-2.0 * n * a);
    CHECK(sys.p_at_edge_scaled().first == doctest::Approx(p * scale).epsilon(1e-10));
  }
}

TEST_CASE("half-line weight keeps its own scale") {
  // Decoupled order and exponent scale: weight e^{-12 x} with a system of order 5.
  const auto sys = build_halfline_system(TruncatedExpWeight::make(0.6, 3), 5);
  CHECK(sys.order() == 5);
  CHECK(std::fabs(halfline_inner(sys, 5, 5, 200) - 1.0) <= 1e-9);
  CHECK(std::fabs(halfline_inner(sys, 5, 0, 200)) <= 1e-9);
}

TEST_CASE("half-line preconditions") {
  CHECK_THROWS_AS(TruncatedExpWeight::make(0.0, 1), InputError);
  CHECK_THROWS_AS(TruncatedExpWeight::make(1.0, 0), InputError);
  CHECK_THROWS_AS(build_halfline_system(TruncatedExpWeight{1.0, 1}, 0), InputError);
  CHECK_THROWS_AS(build_halfline_system(TruncatedExpWeight{1.0, 1}, kMaxHalfLineOrder + 1), InputError);
}

}
