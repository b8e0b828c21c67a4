#include "juliadir/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace juliadir {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

MSequence build_m_sequence(int K) {
  if (K < 1) throw std::domain_error("build_m_sequence: K must be >= 1");
  if (K > 6) {
    throw std::domain_error(
        "build_m_sequence: exact mode capped at K = 6; later terms exceed "
        "any big-integer bit budget");
  }
  MSequence out;
  // exact values while the exponent sum fits the budget
  BigUint sum_exact(0);
  bool exact_ok = true;
  out.exact.push_back(BigUint(2));
  sum_exact += BigUint(2);
  for (int k = 2; k <= K && exact_ok; ++k) {
    if (!sum_exact.fits_u64() || sum_exact.as_u64() >= BigUint::kMaxBits) {
      exact_ok = false;
      break;
    }
    BigUint m = BigUint::pow2(sum_exact.as_u64());
    sum_exact += m;
    out.exact.push_back(m);
  }
  // ln m_k for all K via ln m_{k+1} = (sum_{j<=k} m_j) ln 2
  out.log_m.push_back(std::log(2.0));
  double sum = 2.0;  // running sum of m_j as a double
  for (int k = 2; k <= K; ++k) {
    double lm = sum * kLn2;  // +inf once the sum has overflowed
    out.log_m.push_back(lm);
    sum += (lm > 709.0) ? kInf : std::exp(lm);
  }
  return out;
}

PoleConfiguration build_pole_configuration(const std::vector<double>& directions,
                                           OrderTag tag, double rho, int K) {
  if (directions.empty()) {
    throw std::invalid_argument("build_pole_configuration: no directions");
  }
  if (K < 1) throw std::invalid_argument("build_pole_configuration: K < 1");
  if (tag == OrderTag::Finite && !(rho > 0)) {
    throw std::invalid_argument("build_pole_configuration: rho must be > 0");
  }
  MSequence ms = build_m_sequence(std::min(K, 6));

  PoleConfiguration cfg;
  cfg.tag = tag;
  cfg.rho = (tag == OrderTag::Finite) ? rho : (tag == OrderTag::Zero ? 0.0 : kInf);
  cfg.source = "paper-recursion";
  for (int k = 1; k <= K; ++k) {
    double lm = (k <= (int)ms.log_m.size()) ? ms.log_m[k - 1] : kInf;
    double lr;
    switch (tag) {
      case OrderTag::Finite: lr = lm / rho; break;
      case OrderTag::Zero: lr = k * lm; break;
      default: lr = lm / k; break;
    }
    PoleEntry e;
    e.theta = wrap_angle(directions[(k - 1) % directions.size()]);
    e.log_r = lr;
    e.log_m = lm;
    e.m_value = (k <= (int)ms.exact.size()) ? ms.exact[k - 1].to_double()
                                            : std::exp(std::min(lm, 709.0)) *
                                                  (lm > 709.0 ? kInf : 1.0);
    if (k <= (int)ms.exact.size()) e.m_exact = ms.exact[k - 1];
    e.a = (lr <= 700.0) ? std::polar(std::exp(lr), e.theta)
                        : Complex(kInf, kInf);
    cfg.entries.push_back(e);
  }
  return cfg;
}

PoleConfiguration mild_variant_configuration(const std::vector<double>& directions,
                                             double rho, int K) {
  if (directions.empty() || !(rho > 0) || K < 1) {
    throw std::invalid_argument("mild_variant_configuration: bad arguments");
  }
  PoleConfiguration cfg;
  cfg.tag = OrderTag::Finite;
  cfg.rho = rho;
  cfg.source = "mild-variant";
  const double d = static_cast<double>(directions.size());
  for (int k = 1; k <= K; ++k) {
    double count = d * k * (k + 1) / 2.0;  // poles counted with multiplicity
    double r = std::pow(count, 1.0 / rho);
    for (double theta : directions) {
      PoleEntry e;
      e.theta = wrap_angle(theta);
      e.log_r = std::log(r);
      e.log_m = std::log(static_cast<double>(k));
      e.m_value = k;
      e.m_exact = BigUint(static_cast<uint64_t>(k));
      e.a = std::polar(r, e.theta);
      cfg.entries.push_back(e);
    }
  }
  return cfg;
}

Lemma4Constants solve_lemma4_constants(double c_bound) {
  if (!(c_bound > 0)) {
    throw std::invalid_argument("solve_lemma4_constants: c_bound must be > 0");
  }
  double r0 = std::max(std::sqrt(3.0 * c_bound) * 1.01, 1.0);
  double big = std::exp(std::min(r0, 700.0)) + r0;  // e^{R0} + R0
  // lambda0 = (R0/4) e^{-big}: then R' = lambda0 (e^{big} + 1/3) is about
  // R0/4, comfortably below R0/2.
  double log_lambda0 = std::log(r0 / 4.0) - big;
  double log_rp = log_lambda0 + big + std::log1p(std::exp(-big) / 3.0);
  return {r0, log_lambda0, std::exp(log_rp)};
}

namespace {

// Bound on |z| over the intersection of two distinct rotated strips.
double overlap_radius_bound(double t1, double t2) {
  double d = std::abs(normalize_angle(t1 - t2));
  if (d < 1e-12) return kInf;
  return kPi / std::sin(d / 2.0) + 1.0;
}

}  // namespace

double overlap_sup_log(const std::vector<double>& directions, int k,
                       double c_bound, double lambda_log, int grid) {
  // sup log|f_{k+1}| over strip_k+1 intersect union of earlier strips,
  // f in the strip-growth model. Index k means coefficient a_{k+1}.
  double sup = kNegInf;
  const double tk = directions[k];
  for (int j = 0; j < k; ++j) {
    double rb = overlap_radius_bound(tk, directions[j]);
    if (std::isinf(rb)) {
      throw std::invalid_argument(
          "choose_coefficients: directions coincide, unbounded overlap");
    }
    for (int iy = 0; iy < grid; ++iy) {
      for (int ix = 0; ix < grid; ++ix) {
        Complex z((2.0 * ix / (grid - 1) - 1.0) * rb,
                  (2.0 * iy / (grid - 1) - 1.0) * rb);
        if (!in_strip(z, tk) || !in_strip(z, directions[j])) continue;
        LogComplex v = eval_strip_model(c_bound, z * std::polar(1.0, -tk));
        sup = std::max(sup, v.log_mag);
      }
    }
  }
  if (sup == kNegInf) return kNegInf;  // empty overlap
  return sup + lambda_log;
}

CoefficientPlan choose_coefficients(const std::vector<double>& directions,
                                    double c_bound, double lambda_log,
                                    int grid) {
  if (directions.empty()) {
    throw std::invalid_argument("choose_coefficients: no directions");
  }
  Lemma4Constants lc = solve_lemma4_constants(c_bound);
  CoefficientPlan plan;
  plan.directions = directions;
  plan.c_bound = c_bound;
  plan.r0 = lc.r0;
  plan.log_lambda0 = lambda_log;
  plan.r_prime = lc.r_prime;
  plan.coeff_logs.push_back(0.0);  // a_1 = 1
  for (int k = 1; k < (int)directions.size(); ++k) {
    double sup = overlap_sup_log(directions, k, c_bound, lambda_log, grid);
    // Inflate the grid estimate a little so an independent finer grid
    // stays below it.
    double m_log = (sup == kNegInf) ? kNegInf : sup + std::log(1.05);
    double a_log = -k * kLn2 - std::max(0.0, m_log);
    plan.coeff_logs.push_back(a_log);
  }
  return plan;
}

IntervalDecomposition partition_interval(const Arc& j, double rho) {
  if (!(rho > 0.5)) {
    throw std::domain_error("partition_interval: requires rho > 1/2");
  }
  const double l = j.measure();
  const double piece = kPi / rho;
  if (l + 1e-12 < piece) {
    throw std::domain_error(
        "partition_interval: interval shorter than pi/rho");
  }
  IntervalDecomposition out;
  out.j = j;
  out.rho = rho;

  double x = l * rho / kPi;
  long n_round = std::lround(x);
  const double lo = wrap_angle(j.lo);
  if (std::abs(x - n_round) < 1e-9 && n_round >= 1) {
    // n full pieces tiling J exactly; the last absorbs the fp remainder
    for (long i = 0; i < n_round; ++i) {
      double a = lo + i * piece;
      double width = (i == n_round - 1) ? l - i * piece : piece;
      out.pieces.push_back({PieceKind::Full, {wrap_angle(a), wrap_angle(a) + width}, 0.0});
    }
    return out;
  }
  long big_l = static_cast<long>(std::floor(x));
  for (long i = 0; i + 1 < big_l; ++i) {
    double a = lo + i * piece;
    out.pieces.push_back({PieceKind::Full, {wrap_angle(a), wrap_angle(a) + piece}, 0.0});
  }
  double a = lo + (big_l - 1) * piece;
  double merged = l - (big_l - 1) * piece;  // in (pi/rho, 2pi/rho)
  double theta0 = merged - piece;
  out.pieces.push_back(
      {PieceKind::Partial, {wrap_angle(a), wrap_angle(a) + merged}, theta0});
  return out;
}

double eval_growth_indicator(double beta, double rho, double theta0) {
  if (!(rho > 0)) {
    throw std::domain_error("eval_growth_indicator: rho must be > 0");
  }
  auto u1 = [rho](double x) {
    return (std::abs(x) < kPi / (2.0 * rho)) ? std::cos(rho * x) : 0.0;
  };
  return std::max(u1(beta), u1(beta - theta0));
}

}  // namespace juliadir
