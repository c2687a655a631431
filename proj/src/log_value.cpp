#include "gapasym/log_value.hpp"

#include <cmath>

#include "gapasym/errors.hpp"

namespace gapasym {

namespace {
constexpr double kMaxMaterializedLog = 700.0;
}

LogValue LogValue::from_real(double v) {
  if (!std::isfinite(v)) throw InputError("LogValue::from_real: non-finite value");
  if (v == 0.0) return zero();
  return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
}

double LogValue::to_real() const {
  if (sign == 0) return 0.0;
  if (log_abs > kMaxMaterializedLog)
    throw NumericalFailure("LogValue::to_real: magnitude exceeds exp(700)");
  return sign * std::exp(log_abs);
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.sign == 0) throw NumericalFailure("LogValue: division by zero");
  if (a.sign == 0) return LogValue::zero();
  return {a.sign * b.sign, a.log_abs - b.log_abs};
}

LogValue LogValue::pow(double exponent) const {
  if (sign == 0) {
    if (exponent > 0.0) return zero();
    throw NumericalFailure("LogValue::pow: zero to a non-positive power");
  }
  if (sign < 0 && exponent != std::floor(exponent))
    throw InputError("LogValue::pow: negative base with non-integer exponent");
  int s = 1;
  if (sign < 0 && std::fmod(std::fabs(exponent), 2.0) == 1.0) s = -1;
  return {s, log_abs * exponent};
}

}  // namespace gapasym
