#pragma once

#include <cmath>

namespace gapasym {

/// A real number stored as sign and natural log of its magnitude.
///
/// Determinants of the structured matrices in this library over- and
/// underflow long before they become interesting, so every determinant is
/// carried in this form. `log_abs` is meaningless when `sign == 0`.
struct LogValue {
  int sign = 0;
  double log_abs = 0.0;

  static LogValue zero() { return {}; }
  static LogValue from_log(double log_abs, int sign = 1) { return {sign == 0 ? 0 : (sign > 0 ? 1 : -1), sign == 0 ? 0.0 : log_abs}; }
  static LogValue from_real(double v);

  bool is_zero() const { return sign == 0; }

  // Throws NumericalFailure if the magnitude exceeds exp(700).
  double to_real() const;

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.sign * b.sign, a.log_abs + b.log_abs};
  }
  // Division by a zero LogValue throws NumericalFailure.
  friend LogValue operator/(LogValue a, LogValue b);

  LogValue& operator*=(LogValue other) { return *this = *this * other; }

  LogValue pow(double exponent) const;
};

}  // namespace gapasym
