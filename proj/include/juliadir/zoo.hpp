#pragma once

#include <array>
#include <stdexcept>
#include <variant>
#include <vector>

#include "juliadir/numerics.hpp"
#include "juliadir/poles.hpp"

namespace juliadir {

// lambda * exp(z)
struct Exponential {
  Complex lambda{1.0, 0.0};
};

// sum_{n>=0} z^n / Gamma(n/alpha + 1), entire of order alpha
struct MittagLeffler {
  double alpha = 1.0;
};

// Magnitude model of an entire function that grows like exp(e^z + z) on
// the closed strip {Re z >= 0, |Im z| <= pi} and decays like C |z|^-2
// elsewhere.
struct StripModel {
  double c_bound = 1.0;
};

// lambda e^{i theta} StripModel(e^{-i theta} z)
struct RotatedStrip {
  double theta = 0.0;
  double lambda_log = 0.0;
  double c_bound = 1.0;
};

// Finite sum  sum_n a_n * lambda e^{i theta_n} StripModel(e^{-i theta_n} z),
// a_n given as logs.
struct StripSum {
  std::vector<double> directions;
  std::vector<double> coeff_logs;
  int truncation = 1;
  double lambda_log = 0.0;
  double c_bound = 1.0;
};

// lambda * sum_k (z - a_k)^{-m_k}
struct PoleSeries {
  PoleConfiguration config;
  double lambda = 1.0;
  int truncation = 1 << 20;  // use at most this many leading terms
};

// f(z) = z - (1 - exp(-z)) / (z (z^2 + 4 pi^2)). Entire: the singularities
// at 0 and +-2pi*i are removable. A perturbation of z - z^-3 whose petals
// at infinity become invariant half-plane quadrants.
struct PetalMap {};

// One of the three split parts of PetalMap:
//   1: z - z^-3    2: exp(-z)/z^3    3: (1-exp(-z)) 4pi^2 / (z^3 (z^2+4pi^2))
struct PetalComponent {
  int which = 1;
};

using FunctionSpec =
    std::variant<Exponential, MittagLeffler, StripModel, RotatedStrip,
                 StripSum, PoleSeries, PetalMap, PetalComponent>;

struct PoleHitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MlMode { Auto, Series, Asymptotic };

LogComplex eval_exponential(const Complex& lambda, const Complex& z);

LogComplex eval_mittag_leffler(double alpha, const Complex& z,
                               MlMode mode = MlMode::Auto,
                               double r_switch = 30.0,
                               long term_cap = 1000000);

LogComplex eval_strip_model(double c_bound, const Complex& z);

LogComplex eval_strip_sum(const StripSum& s, const Complex& z);

LogComplex eval_pole_series(const PoleConfiguration& config, double lambda,
                            const Complex& z, int truncation);

Complex eval_petal(const Complex& z);

// The three components in log form; throws std::domain_error at 0, +-2pi*i.
std::array<LogComplex, 3> eval_petal_components(const Complex& z);

// Any spec, in log form (overflow safe). Throws PoleHitError on a pole.
LogComplex eval_log(const FunctionSpec& f, const Complex& z);

// Any spec, as a plain complex value; components may overflow to inf.
Complex eval_value(const FunctionSpec& f, const Complex& z);

// Is z inside the closed rotated strip e^{i theta}{Re>=0, |Im|<=pi}?
bool in_strip(const Complex& z, double theta);

}  // namespace juliadir
