#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gapasym/asymptotics.hpp"
#include "gapasym/calculus.hpp"
#include "gapasym/errors.hpp"
#include "gapasym/fredholm.hpp"
#include "gapasym/specfun.hpp"
#include "gapasym/structured.hpp"

using namespace gapasym;
using namespace gapasym::asymptotics;

namespace {
constexpr double kPi = std::numbers::pi;

double fd_toeplitz(int n, double a) {
  return numerics::central_difference([n](double x) { return structured::toeplitz_logdet_arc(n, x).log_abs; }, a,
                                      structured::default_fd_step(a));
}

double fd_hankel(int n, double a) {
  return numerics::central_difference([n](double x) { return structured::hankel_logdet_trunc(n, x).log_abs; }, a,
                                      structured::default_fd_step(a));
}
}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("expansion totals are the sums of their terms") {
  for (const auto& e : {dyson_expansion(3.3), tw_expansion(2.2), asf_eval(17, 1.1), intD2_eval(9, 0.3)}) {
    double s = 0.0;
    for (const auto& t : e.terms) s += t.second;
    CHECK(e.total == s);
  }
}

TEST_CASE("dyson expansion") {
  const auto& c = specfun::constants();
  CHECK(dyson_expansion(1.0).total == doctest::Approx(-0.5 + c.c0).epsilon(1e-15));
  CHECK(dyson_expansion(std::numbers::e).term("log") == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(dyson_expansion(2.0).terms.size() == 3);
  CHECK_THROWS_AS(dyson_expansion(0.0), InputError);
}

TEST_CASE("dyson expansion against the sine determinant") {
  double prev = INFINITY;
  for (double s : {4.0, 6.0, 8.0, 10.0}) {
    const double gap = std::fabs(dyson_expansion(s).total - fredholm::fredholm_det_sine({s}).log_det);
    CHECK(gap < prev);
    prev = gap;
    if (s == 8.0) CHECK(gap <= 0.02);
  }
}

TEST_CASE("tracy-widom expansion") {
  const auto& c = specfun::constants();
  CHECK(tw_expansion(1.0).total == doctest::Approx(-1.0 / 12 + c.chi_tw).epsilon(1e-15));
  CHECK(tw_expansion(2.0).term("cubic") == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  CHECK(std::fabs(tw_expansion(8.0).total - fredholm::fredholm_det_airy({8.0}).log_det) <= 0.01);
}

TEST_CASE("arc expansion") {
  CHECK(asf_eval(10, kPi - 1e-3).term("quadratic") < asf_eval(10, kPi - 1e-2).term("quadratic"));
  CHECK(asf_eval(10, kPi - 1e-6).total < -1000.0);
  const double g30 = std::fabs(asf_eval(30, kPi / 2).total - structured::toeplitz_logdet_arc(30, kPi / 2).log_abs);
  const double g60 = std::fabs(asf_eval(60, kPi / 2).total - structured::toeplitz_logdet_arc(60, kPi / 2).log_abs);
  CHECK(g30 <= 0.05);
  CHECK(g60 < g30);
  double prev = INFINITY;
  for (int n : {10, 20, 40}) {
    const double g = std::fabs(asf_eval(n, 2.0).total - structured::toeplitz_logdet_arc(n, 2.0).log_abs);
    CHECK(g < prev);
    prev = g;
  }
  CHECK_THROWS_AS(asf_eval(0, 1.0), InputError);
  CHECK_THROWS_AS(asf_eval(5, kPi), InputError);
}

TEST_CASE("integrated hankel expansion") {
  const int n = 64;
  const double a = 1.0 - 4.0 / std::pow(2.0 * n, 2.0 / 3.0);
  const double ratio = structured::hankel_logdet_trunc(n, a).log_abs - structured::hankel_logdet_laguerre_full(n).log_abs;
  CHECK(std::fabs(intD2_eval(n, a).total - ratio) <= 0.05);

  const double q8 = intD2_eval(8, 0.5).term("quadratic");
  const double q16 = intD2_eval(16, 0.5).term("quadratic");
  const double q32 = intD2_eval(32, 0.5).term("quadratic");
  CHECK(q16 / q8 == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(q32 / q16 == doctest::Approx(4.0).epsilon(1e-12));

  CHECK(intD2_eval(5, 1.0 - 1e-9).term("edge") > intD2_eval(5, 1.0 - 1e-3).term("edge"));
  CHECK(intD2_eval(5, 1.0 - 1e-12).term("edge") > 3.0);
  CHECK_THROWS_AS(intD2_eval(5, 1.0), InputError);
  CHECK_THROWS_AS(intD2_eval(5, 0.0), InputError);
}

TEST_CASE("derivative main terms") {
  CHECK(diff_rhs_eval(4, kPi / 2) == doctest::Approx(-8.0 - 0.125).epsilon(1e-14));
  CHECK(di2_rhs_eval(2, 0.5) == doctest::Approx(2.0 + 0.5 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(diff_rhs_eval(4, kPi), InputError);
  CHECK_THROWS_AS(di2_rhs_eval(4, 1.0), InputError);
}

TEST_CASE("circle derivative against its main terms") {
  const int n = 32;
  CHECK(std::fabs(fd_toeplitz(n, kPi / 2) - diff_rhs_eval(n, kPi / 2)) <= 5.0 / n);
}

TEST_CASE("half-line derivative against its main terms") {
  std::vector<double> ns, gaps;
  for (int n : {16, 32}) {
    ns.push_back(n);
    gaps.push_back(std::fabs(fd_hankel(n, 0.5) - di2_rhs_eval(n, 0.5)));
  }
  // gap <= C / n with C fitted from the data
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(gaps[i] * ns[i] <= 10.0);
}

TEST_CASE("expansions differentiate to the derivative main terms") {
  CHECK(std::fabs(asf_derivative(64, kPi / 2) - diff_rhs_eval(64, kPi / 2)) <= 1.0 / (8 * 64));
  CHECK(std::fabs(intD2_derivative(64, 0.5) - di2_rhs_eval(64, 0.5)) <= 1.0 / 64);
  // Analytic derivative against a difference quotient of the totals.
  const double h = 1e-6;
  const double fa = (asf_eval(64, kPi / 2 + h).total - asf_eval(64, kPi / 2 - h).total) / (2 * h);
  CHECK(fa == doctest::Approx(asf_derivative(64, kPi / 2)).epsilon(1e-7));
  const double fi = (intD2_eval(64, 0.5 + h).total - intD2_eval(64, 0.5 - h).total) / (2 * h);
  CHECK(fi == doctest::Approx(intD2_derivative(64, 0.5)).epsilon(1e-7));
}

TEST_CASE("arc and dyson expansions meet in the double-scaling regime") {
  const double s = 2.0;
  const double d64 = std::fabs(asf_eval(64, 2 * s / 64).total - dyson_expansion(s).total);
  const double d256 = std::fabs(asf_eval(256, 2 * s / 256).total - dyson_expansion(s).total);
  CHECK(d256 <= 0.5 * d64);
}

TEST_CASE("selberg residual") {
  const int orders[] = {50, 100, 200, 400};
  const auto r = selberg_delta_n(orders);
  REQUIRE(r.residual.size() == 4);
  CHECK(std::fabs(selberg_delta(200)) < std::fabs(selberg_delta(50)));
  CHECK(r.magnitudes_strictly_decreasing());
  CHECK(std::fabs(r.extrapolated_limit) <= 1e-4);
  for (double v : r.residual) CHECK(v < 0.0);
  CHECK(r.fitted_order == 2.0);
}

TEST_CASE("hankel constant residual") {
  const int orders[] = {50, 100, 200, 400};
  const auto r = hankel_delta_tilde_n(orders);
  CHECK(std::fabs(hankel_delta_tilde(200)) < std::fabs(hankel_delta_tilde(50)));
  CHECK(r.magnitudes_strictly_decreasing());
  CHECK(std::fabs(r.extrapolated_limit) <= 1e-4);
  CHECK(std::isfinite(hankel_delta_tilde(2)));
  const int bad[] = {1, 5};
  CHECK_THROWS_AS(hankel_delta_tilde_n(bad), InputError);
}

TEST_CASE("residual series helpers") {
  const auto single = make_residual_series({5.0}, {0.1});
  CHECK(single.extrapolated_limit == 0.1);
  CHECK(single.fitted_order == 0.0);
  CHECK(single.magnitudes_strictly_decreasing());
  // r = 2 + 3/p^2 recovers 2.
  std::vector<double> p{10, 20, 40, 80}, r;
  for (double x : p) r.push_back(2.0 + 3.0 / (x * x));
  const auto s = make_residual_series(p, r);
  CHECK(s.fitted_order == 2.0);
  CHECK(s.extrapolated_limit == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(make_residual_series({1.0, 2.0}, {1.0}), InputError);
}

TEST_CASE("dyson constant recovery") {
  const double s[] = {4.0, 6.0, 8.0, 10.0};
  const auto r = constant_recovery(RecoveryKind::dyson, s);
  CHECK(r.magnitudes_strictly_decreasing());
  CHECK(std::fabs(r.residual.back()) <= 0.02);
}

TEST_CASE("tracy-widom constant recovery") {
  const double s[] = {3.0, 5.0, 8.0};
  const auto r = constant_recovery(RecoveryKind::tracy_widom, s);
  CHECK(r.magnitudes_strictly_decreasing());
  CHECK(std::fabs(r.residual.back()) <= 0.01);
}

TEST_CASE("constant recovery edge cases") {
  const double one[] = {5.0};
  CHECK(constant_recovery(RecoveryKind::dyson, one).residual.size() == 1);
  const double low[] = {1.0, 3.0};
  CHECK_THROWS_AS(constant_recovery(RecoveryKind::dyson, low), InputError);
  const double unordered[] = {5.0, 4.0};
  CHECK_THROWS_AS(constant_recovery(RecoveryKind::tracy_widom, unordered), InputError);
}

}
