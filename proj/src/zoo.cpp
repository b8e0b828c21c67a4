#include "juliadir/zoo.hpp"

#include <algorithm>
#include <cmath>

#include "juliadir/gammafn.hpp"

namespace juliadir {

namespace {

// log |1 - exp(-z)| and arg(1 - exp(-z)) without overflow for any Re z.
LogComplex one_minus_exp_neg(const Complex& z) {
  double x = z.real(), y = z.imag();
  if (x < -36.0) {
    // exp(-z) dominates: 1 - e^{-z} = -e^{-z}(1 - e^{z})
    // |1 - e^{z}| is within e^{x} of 1.
    Complex corr = 1.0 - std::exp(Complex(x, y));
    return LogComplex::from_polar_log(-x + std::log(std::abs(corr)),
                                      kPi - y + std::arg(corr));
  }
  if (x > 36.0) {
    return LogComplex::from_polar_log(0.0, 0.0);  // 1 to double precision
  }
  Complex v = 1.0 - std::exp(-z);
  return LogComplex::from_complex(v);
}

}  // namespace

bool in_strip(const Complex& z, double theta) {
  Complex w = z * std::polar(1.0, -theta);
  return w.real() >= 0.0 && std::abs(w.imag()) <= kPi;
}

LogComplex eval_exponential(const Complex& lambda, const Complex& z) {
  if (lambda == Complex(0.0, 0.0)) {
    throw std::invalid_argument("eval_exponential: lambda must be nonzero");
  }
  return LogComplex::from_polar_log(std::log(std::abs(lambda)) + z.real(),
                                    std::arg(lambda) + z.imag());
}

LogComplex eval_strip_model(double c_bound, const Complex& z) {
  if (!(c_bound > 0)) {
    throw std::invalid_argument("eval_strip_model: c_bound must be positive");
  }
  double x = z.real(), y = z.imag();
  if (x >= 0.0 && std::abs(y) <= kPi) {
    // exp(e^z + z): log-magnitude e^x cos y + x, argument e^x sin y + y
    if (x > 690.0) {
      double c = std::cos(y);
      double lm = (c > 0) ? kInf : (c < 0 ? kNegInf : x);
      return {lm, 0.0};
    }
    double ex = std::exp(x);
    return LogComplex::from_polar_log(ex * std::cos(y) + x,
                                      ex * std::sin(y) + y);
  }
  double r2 = std::norm(z);
  if (r2 == 0.0) return {kInf, 0.0};
  return LogComplex::from_polar_log(std::log(c_bound) - std::log(r2), 0.0);
}

LogComplex eval_mittag_leffler(double alpha, const Complex& z, MlMode mode,
                               double r_switch, long term_cap) {
  if (!(alpha > 0)) {
    throw std::invalid_argument("eval_mittag_leffler: alpha must be positive");
  }
  double r = std::abs(z);
  if (r == 0.0) return LogComplex::from_polar_log(0.0, 0.0);  // value 1

  if (mode == MlMode::Auto) {
    mode = (r < r_switch) ? MlMode::Series : MlMode::Asymptotic;
  }

  if (mode == MlMode::Asymptotic) {
    double phi = std::arg(z);
    if (std::abs(phi) <= kPi / (2.0 * alpha)) {
      // alpha * exp(z^alpha), principal branch
      double ra = std::pow(r, alpha);
      return LogComplex::from_polar_log(
          std::log(alpha) + ra * std::cos(alpha * phi),
          ra * std::sin(alpha * phi));
    }
    return LogComplex::from_polar_log(-std::log(r), 0.0);  // O(1/|z|) bound
  }

  // Series with peak-rescaled accumulation.
  const double lr = std::log(r);
  const double phi = std::arg(z);
  const double n_min = 2.0 * alpha * std::pow(r, alpha) + 20.0;
  LogSum sum;
  for (long n = 0; n < term_cap; ++n) {
    double tl = n * lr - log_gamma(n / alpha + 1.0);
    sum.add(tl, n * phi);
    if (n > n_min && tl < sum.log_mag() + std::log(1e-17)) {
      return sum.value();
    }
  }
  throw NonConvergenceError("eval_mittag_leffler: series term cap exceeded");
}

LogComplex eval_strip_sum(const StripSum& s, const Complex& z) {
  if (s.directions.size() != s.coeff_logs.size()) {
    throw std::invalid_argument("eval_strip_sum: directions/coeff length mismatch");
  }
  int n = std::min<int>(s.truncation, static_cast<int>(s.directions.size()));
  LogSum sum;
  for (int i = 0; i < n; ++i) {
    Complex w = z * std::polar(1.0, -s.directions[i]);
    LogComplex e = eval_strip_model(s.c_bound, w);
    sum.add(s.coeff_logs[i] + s.lambda_log + e.log_mag,
            s.directions[i] + e.arg);
  }
  return sum.value();
}

LogComplex eval_pole_series(const PoleConfiguration& config, double lambda,
                            const Complex& z, int truncation) {
  const auto& entries = config.entries;
  int n = std::min<int>(truncation, static_cast<int>(entries.size()));
  if (n == 0) throw std::invalid_argument("eval_pole_series: empty configuration");

  // First pass: term log-magnitudes; bail out on a pole hit.
  std::vector<double> tl(n), ta(n);
  double peak = kNegInf;
  for (int i = 0; i < n; ++i) {
    const auto& e = entries[i];
    if (!std::isfinite(e.a.real())) {
      tl[i] = kNegInf;
      ta[i] = 0;
      continue;
    }
    Complex d = z - e.a;
    double ad = std::abs(d);
    if (ad == 0.0) throw PoleHitError("eval_pole_series: z equals a pole");
    tl[i] = -e.m_value * std::log(ad);
    ta[i] = normalize_angle(-e.m_value * std::arg(d));
    peak = std::max(peak, tl[i]);
  }
  // Terms more than e^50 below the largest contribute nothing at double
  // precision; drop them.
  LogSum sum;
  for (int i = 0; i < n; ++i) {
    if (tl[i] >= peak - 50.0) sum.add(tl[i], ta[i]);
  }
  return sum.value().scaled(std::log(lambda));
}

namespace {

// phi(w) = sum_{k=0}^{12} (-w)^k / (k+1)!  == (1 - e^{-w}) / w
Complex phi12(const Complex& w) {
  Complex acc{0.0, 0.0};
  double fact = 1.0;  // (k+1)! running
  Complex pw{1.0, 0.0};
  for (int k = 0; k <= 12; ++k) {
    fact *= (k + 1);
    acc += pw / fact;
    pw *= -w;
  }
  return acc;
}

const double kFourPiSq = 4.0 * kPi * kPi;
const Complex kTwoPiI{0.0, kTwoPi};

}  // namespace

Complex eval_petal(const Complex& z) {
  const double disk = 1e-2;
  // Removable points 0, +-2pi*i: expand the ratio there.
  if (std::abs(z) <= disk) {
    return z - phi12(z) / (z * z + kFourPiSq);
  }
  if (std::abs(z - kTwoPiI) <= disk) {
    Complex w = z - kTwoPiI;
    return z - phi12(w) / (z * (w + Complex(0.0, 2.0 * kTwoPi)));
  }
  if (std::abs(z + kTwoPiI) <= disk) {
    Complex w = z + kTwoPiI;
    return z - phi12(w) / (z * (w - Complex(0.0, 2.0 * kTwoPi)));
  }
  return z - (1.0 - std::exp(-z)) / (z * (z * z + kFourPiSq));
}

std::array<LogComplex, 3> eval_petal_components(const Complex& z) {
  if (z == Complex(0, 0) || z == kTwoPiI || z == -kTwoPiI) {
    throw std::domain_error("eval_petal_components: z at an excluded point");
  }
  double lz = std::log(std::abs(z));
  double az = std::arg(z);

  LogComplex g1 = LogComplex::from_complex(z - 1.0 / (z * z * z));
  // |z| can exceed the cube-able range in profile sweeps; fall back to the
  // dominant term (the correction is below double precision there).
  if (std::abs(z) > 1e100) g1 = LogComplex::from_complex(z);

  // g2 = exp(-z)/z^3
  LogComplex g2 = LogComplex::from_polar_log(-z.real() - 3.0 * lz,
                                             -z.imag() - 3.0 * az);

  // g3 = (1 - exp(-z)) / z^3 * 4pi^2 / (z^2 + 4pi^2)
  LogComplex num = one_minus_exp_neg(z);
  Complex den2 = z * z + kFourPiSq;
  double lden2, aden2;
  if (std::abs(z) > 1e100) {
    lden2 = 2.0 * lz;
    aden2 = normalize_angle(2.0 * az);
  } else {
    lden2 = std::log(std::abs(den2));
    aden2 = std::arg(den2);
  }
  LogComplex g3 = LogComplex::from_polar_log(
      num.log_mag - 3.0 * lz + std::log(kFourPiSq) - lden2,
      num.arg - 3.0 * az - aden2);
  return {g1, g2, g3};
}

LogComplex eval_log(const FunctionSpec& f, const Complex& z) {
  return std::visit(
      [&](const auto& spec) -> LogComplex {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, Exponential>) {
          return eval_exponential(spec.lambda, z);
        } else if constexpr (std::is_same_v<T, MittagLeffler>) {
          return eval_mittag_leffler(spec.alpha, z);
        } else if constexpr (std::is_same_v<T, StripModel>) {
          return eval_strip_model(spec.c_bound, z);
        } else if constexpr (std::is_same_v<T, RotatedStrip>) {
          Complex w = z * std::polar(1.0, -spec.theta);
          LogComplex e = eval_strip_model(spec.c_bound, w);
          return LogComplex::from_polar_log(spec.lambda_log + e.log_mag,
                                            spec.theta + e.arg);
        } else if constexpr (std::is_same_v<T, StripSum>) {
          return eval_strip_sum(spec, z);
        } else if constexpr (std::is_same_v<T, PoleSeries>) {
          return eval_pole_series(spec.config, spec.lambda, z, spec.truncation);
        } else if constexpr (std::is_same_v<T, PetalMap>) {
          auto g = eval_petal_components(z);
          LogSum s;
          s.add(g[0]);
          s.add(g[1]);
          s.add(g[2]);
          return s.value();
        } else {
          static_assert(std::is_same_v<T, PetalComponent>);
          auto g = eval_petal_components(z);
          return g[spec.which - 1];
        }
      },
      f);
}

Complex eval_value(const FunctionSpec& f, const Complex& z) {
  if (std::holds_alternative<PetalMap>(f)) return eval_petal(z);
  if (const auto* e = std::get_if<Exponential>(&f)) {
    // Direct evaluation keeps full precision for orbits.
    if (z.real() < 700.0) return e->lambda * std::exp(z);
  }
  return eval_log(f, z).to_complex();
}

}  // namespace juliadir
