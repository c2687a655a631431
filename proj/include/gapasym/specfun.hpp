#pragma once

#include "gapasym/log_value.hpp"

namespace gapasym::specfun {

struct AiryValue {
  double ai;
  double ai_prime;
};

// Range over which airy() is validated to 1e-12 absolute.
inline constexpr double kAiryMin = -15.0;
inline constexpr double kAiryMax = 20.0;

// Branch switch points: the Maclaurin series is used on
// [kAirySeriesLower, kAirySeriesUpper], asymptotic expansions outside.
inline constexpr double kAirySeriesLower = -8.5;
inline constexpr double kAirySeriesUpper = 5.8;

// Ai and Ai'. Throws DomainError outside [kAiryMin, kAiryMax].
AiryValue airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

// The two branches, exposed for consistency checks. The Maclaurin branch is
// summed in long double; the asymptotic branch is truncated at its smallest
// term and requires |x| >= 2.
AiryValue airy_maclaurin(double x);
AiryValue airy_asymptotic(double x);

// ln(k!). Direct summation through k = 256, Stirling series beyond.
double log_factorial(long k);

// gamma(a, x) = int_0^x t^(a-1) e^(-t) dt, in log form.
// Series for x < a + 1, continued fraction for the complement otherwise.
LogValue lower_incomplete_gamma(double a, double x);

struct Constants {
  double zeta_prime_minus_one;  // zeta'(-1)
  double c0;                    // sine-kernel constant, ln2/12 + 3 zeta'(-1)
  double chi_tw;                // Airy-kernel constant, ln2/24 + zeta'(-1)
};

// Computed once on first use and cached; safe to call concurrently.
const Constants& constants();

// zeta'(2) by Euler-Maclaurin summation of -sum ln k / k^2.
double zeta_prime_two();

}  // namespace gapasym::specfun
