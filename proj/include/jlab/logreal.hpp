#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "jlab/combinatorics.hpp"

namespace jlab {

/// Signed real stored as (sign, ln|value|). Represents magnitudes such as
/// 2^(-c n^(2r-6)) or binom(n, r)^n without overflow or underflow.
class LogReal {
 public:
  LogReal() = default;  // zero

  static LogReal from_log(double log_magnitude, int sign = 1) {
    LogReal v;
    if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return v;
    v.sign_ = sign > 0 ? 1 : -1;
    v.log_ = log_magnitude;
    return v;
  }

  static LogReal from_double(double x) {
    if (x == 0.0) return {};
    return from_log(std::log(std::fabs(x)), x > 0 ? 1 : -1);
  }

  static LogReal from_bigint(const BigInt& x) {
    if (x == 0) return {};
    return x > 0 ? from_log(log_of(x), 1) : from_log(log_of(-x), -1);
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  // ln|x|; -inf for zero.
  double log_magnitude() const { return sign_ == 0 ? -std::numeric_limits<double>::infinity() : log_; }
  double log10_magnitude() const { return log_magnitude() / std::log(10.0); }
  // May round to 0 or +-inf.
  double to_double() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_); }

  LogReal operator-() const { return from_log(log_, -sign_); }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return from_log(a.log_ + b.log_, a.sign_ * b.sign_);
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.is_zero()) return from_log(std::numeric_limits<double>::infinity(), a.sign_ == 0 ? 1 : a.sign_);
    if (a.is_zero()) return {};
    return from_log(a.log_ - b.log_, a.sign_ * b.sign_);
  }

  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogReal& big = a.log_ >= b.log_ ? a : b;
    const LogReal& small = a.log_ >= b.log_ ? b : a;
    const double d = small.log_ - big.log_;  // <= 0
    if (big.sign_ == small.sign_) return from_log(big.log_ + std::log1p(std::exp(d)), big.sign_);
    if (d == 0.0) return {};
    return from_log(big.log_ + std::log1p(-std::exp(d)), big.sign_);
  }

  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  friend bool operator<(const LogReal& a, const LogReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    return a.sign_ > 0 ? a.log_ < b.log_ : a.log_ > b.log_;
  }
  friend bool operator>(const LogReal& a, const LogReal& b) { return b < a; }
  friend bool operator<=(const LogReal& a, const LogReal& b) { return !(b < a); }
  friend bool operator>=(const LogReal& a, const LogReal& b) { return !(a < b); }
  friend bool operator==(const LogReal& a, const LogReal& b) { return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_ == b.log_); }

  // "0", or "[-]m.mmmmmme[+-]E" computed in the log domain.
  std::string to_string(int digits = 6) const;

 private:
  int sign_ = 0;
  double log_ = 0.0;
};

// Sum of many terms with one shared max shift (more accurate than folding +).
LogReal log_sum(std::span<const LogReal> terms);

}  // namespace jlab
