#include "jlab/logreal.hpp"

#include <algorithm>
#include <cstdio>

namespace jlab {

std::string LogReal::to_string(int digits) const {
  if (sign_ == 0) return "0";
  if (std::isinf(log_)) return sign_ > 0 ? "inf" : "-inf";
  const double l10 = log_ / std::log(10.0);
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  // Rounding may push the mantissa to 10.0.
  const double scale = std::pow(10.0, digits);
  if (std::round(mantissa * scale) / scale >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.*fe%+.0f", sign_ < 0 ? "-" : "", digits, mantissa, exponent);
  return buf;
}

LogReal log_sum(std::span<const LogReal> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (!t.is_zero()) top = std::max(top, t.log_magnitude());
  }
  if (top == -std::numeric_limits<double>::infinity()) return {};
  if (std::isinf(top)) {
    int s = 0;
    for (const auto& t : terms) {
      if (!t.is_zero() && std::isinf(t.log_magnitude())) s += t.sign();
    }
    return LogReal::from_log(top, s >= 0 ? 1 : -1);
  }
  double pos = 0.0;
  double neg = 0.0;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const double w = std::exp(t.log_magnitude() - top);
    (t.sign() > 0 ? pos : neg) += w;
  }
  const double net = pos - neg;
  if (net == 0.0) return {};
  return LogReal::from_log(top + std::log(std::fabs(net)), net > 0 ? 1 : -1);
}

}  // namespace jlab
