#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace juliadir {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Fold an angle into (-pi, pi].
inline double normalize_angle(double a) {
  if (!std::isfinite(a)) return 0.0;
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

// Fold an angle into [0, 2pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// A complex value stored as (natural log of magnitude, argument).
// log_mag == -inf encodes zero, in which case arg is 0 by convention.
struct LogComplex {
  double log_mag = kNegInf;
  double arg = 0.0;

  static LogComplex zero() { return {kNegInf, 0.0}; }

  static LogComplex from_complex(const Complex& z) {
    double m = std::abs(z);
    if (m == 0.0) return zero();
    return {std::log(m), normalize_angle(std::arg(z))};
  }

  static LogComplex from_polar_log(double log_mag, double arg) {
    if (log_mag == kNegInf) return zero();
    return {log_mag, normalize_angle(arg)};
  }

  Complex to_complex() const {
    if (log_mag == kNegInf) return {0.0, 0.0};
    double m = std::exp(log_mag);
    return {m * std::cos(arg), m * std::sin(arg)};
  }

  bool is_zero() const { return log_mag == kNegInf; }

  LogComplex operator*(const LogComplex& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return from_polar_log(log_mag + o.log_mag, arg + o.arg);
  }

  LogComplex scaled(double log_factor) const {
    if (is_zero()) return zero();
    return {log_mag + log_factor, arg};
  }
};

// Accumulates a sum of terms given in log-polar form. The running sum is
// kept rescaled by the largest term magnitude seen so far, so sums whose
// individual terms overflow double range stay representable.
class LogSum {
 public:
  void add(double term_log_mag, double term_arg) {
    if (term_log_mag == kNegInf) return;
    if (term_log_mag > peak_) {
      if (peak_ != kNegInf) acc_ *= std::exp(peak_ - term_log_mag);
      peak_ = term_log_mag;
    }
    double s = std::exp(term_log_mag - peak_);
    acc_ += Complex(s * std::cos(term_arg), s * std::sin(term_arg));
  }

  void add(const LogComplex& t) { add(t.log_mag, t.arg); }

  LogComplex value() const {
    double m = std::abs(acc_);
    if (m == 0.0 || peak_ == kNegInf) return LogComplex::zero();
    return LogComplex::from_polar_log(peak_ + std::log(m),
                                      std::arg(acc_));
  }

  // Log-magnitude of the current partial sum (-inf if empty).
  double log_mag() const {
    double m = std::abs(acc_);
    if (m == 0.0 || peak_ == kNegInf) return kNegInf;
    return peak_ + std::log(m);
  }

 private:
  double peak_ = kNegInf;
  Complex acc_{0.0, 0.0};
};

// Relative deviation |a - b| / |b| computed without leaving log domain
// until the common scale has been removed.
inline double relative_deviation(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : kInf;
  double scale = b.log_mag;
  Complex av = a.is_zero() ? Complex{0, 0}
                           : LogComplex{a.log_mag - scale, a.arg}.to_complex();
  Complex bv = LogComplex{0.0, b.arg}.to_complex();
  return std::abs(av - bv);
}

}  // namespace juliadir
