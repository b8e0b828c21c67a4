#include "juliadir/direction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "juliadir/parallel.hpp"

namespace juliadir {

GrowthProfile sample_growth_profile(const FunctionSpec& f,
                                    const std::vector<double>& radii, int bins,
                                    int threads) {
  if (bins < 8) throw std::invalid_argument("sample_growth_profile: bins < 8");
  for (size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 2.0 || (i && radii[i] <= radii[i - 1])) {
      throw std::invalid_argument(
          "sample_growth_profile: radii must be increasing and >= 2");
    }
  }
  GrowthProfile p;
  p.radii = radii;
  p.bins = bins;
  const size_t nr = radii.size();
  p.indicator.assign((size_t)bins * nr, 0.0);
  p.flagged.assign((size_t)bins * nr, 0);

  parallel_for(bins, threads, [&](long b) {
    double theta = kTwoPi * b / bins;
    for (size_t i = 0; i < nr; ++i) {
      double r = radii[i];
      Complex z = std::polar(r, theta);
      double v;
      bool bad = false;
      try {
        v = eval_log(f, z).log_mag / std::log(r);
        if (!std::isfinite(v)) bad = true;
      } catch (const PoleHitError&) {
        bad = true;
        v = 0.0;
      }
      p.indicator[(size_t)b * nr + i] = v;
      p.flagged[(size_t)b * nr + i] = bad ? 1 : 0;
    }
  });

  // A mostly-flagged bin inherits its largest finite neighbor value,
  // sample by sample, so single near-pole blowups do not leak into the
  // estimators.
  for (int b = 0; b < bins; ++b) {
    size_t nflag = 0;
    for (size_t i = 0; i < nr; ++i) nflag += p.is_flagged(b, i);
    if (2 * nflag <= nr) continue;
    int bl = (b + bins - 1) % bins, br = (b + 1) % bins;
    for (size_t i = 0; i < nr; ++i) {
      if (!p.is_flagged(b, i)) continue;
      double best = kNegInf;
      if (!p.is_flagged(bl, i)) best = std::max(best, p.at(bl, i));
      if (!p.is_flagged(br, i)) best = std::max(best, p.at(br, i));
      if (best != kNegInf) {
        p.indicator[(size_t)b * nr + i] = best;
        p.flagged[(size_t)b * nr + i] = 0;
      }
    }
  }
  return p;
}

DirectionSet estimate_td(const GrowthProfile& p, double tau) {
  const size_t nr = p.radii.size();
  if (nr < 3) throw std::invalid_argument("estimate_td: need >= 3 radii");
  std::vector<char> flags(p.bins, 0);
  for (int b = 0; b < p.bins; ++b) {
    if (p.is_flagged(b, nr - 1) || p.is_flagged(b, nr - 2) ||
        p.is_flagged(b, nr - 3)) {
      continue;
    }
    double i0 = p.at(b, nr - 3), i1 = p.at(b, nr - 2), i2 = p.at(b, nr - 1);
    if (i2 > tau && i0 <= i1 && i1 <= i2) flags[b] = 1;
  }
  return arcs_from_bins(flags);
}

namespace {

double lsq_slope(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::runtime_error("degenerate least-squares fit");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

OrderEstimate estimate_order_entire(const FunctionSpec& f,
                                    const std::vector<double>& radii,
                                    int bins) {
  if (radii.size() < 2 || radii.back() < 10.0 * radii.front()) {
    throw std::invalid_argument(
        "estimate_order_entire: radii must span at least a decade");
  }
  OrderEstimate est;
  est.method = OrderMethod::MaxModulus;
  for (double r : radii) {
    double log_m = kNegInf;
    for (int b = 0; b < bins; ++b) {
      Complex z = std::polar(r, kTwoPi * b / bins);
      log_m = std::max(log_m, eval_log(f, z).log_mag);
    }
    if (!(log_m > 0)) {
      throw std::runtime_error(
          "estimate_order_entire: ln M(r) <= 0, degenerate fit");
    }
    est.samples.emplace_back(std::log(r), std::log(log_m));
  }
  std::vector<std::pair<double, double>> top(
      est.samples.begin() + est.samples.size() / 2, est.samples.end());
  est.rho_hat = lsq_slope(top);
  return est;
}

BigUint pole_count_exact(const PoleConfiguration& config, double r) {
  BigUint n(0);
  for (const auto& e : config.entries) {
    if (e.log_r <= std::log(r)) {
      if (!e.m_exact) throw std::runtime_error("pole_count_exact: non-exact multiplicity");
      n += *e.m_exact;
    }
  }
  return n;
}

double pole_count_log(const PoleConfiguration& config, double r) {
  // log of sum of multiplicities, via log-sum-exp
  double peak = kNegInf;
  const double lr = std::log(r);
  for (const auto& e : config.entries) {
    if (e.log_r <= lr) peak = std::max(peak, e.log_m);
  }
  if (peak == kNegInf) return kNegInf;
  double s = 0;
  for (const auto& e : config.entries) {
    if (e.log_r <= lr) s += std::exp(e.log_m - peak);
  }
  return peak + std::log(s);
}

OrderEstimate estimate_order_from_poles(const PoleConfiguration& config,
                                        const std::vector<double>& radii) {
  if (config.entries.empty()) {
    throw std::invalid_argument("estimate_order_from_poles: empty configuration");
  }
  std::vector<PoleEntry> sorted = config.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const PoleEntry& a, const PoleEntry& b) { return a.log_r < b.log_r; });

  OrderEstimate est;
  est.method = OrderMethod::PoleCounting;
  for (double r : radii) {
    const double lr = std::log(r);
    // N(r) = sum_{r_k <= r} m_k (ln r - ln r_k), exact piecewise integral
    double big_n = 0;
    for (const auto& e : sorted) {
      if (e.log_r <= lr) big_n += e.m_value * (lr - e.log_r);
    }
    if (big_n > 0) est.samples.emplace_back(lr, std::log(big_n));
  }
  if (est.samples.size() < 2) {
    throw std::invalid_argument("estimate_order_from_poles: too few usable radii");
  }
  std::vector<std::pair<double, double>> top(
      est.samples.begin() + est.samples.size() / 2, est.samples.end());
  est.rho_hat = lsq_slope(top);
  return est;
}

double lower_bound_measure(double mu, double delta) {
  if (!(mu > 0) || !(delta > 0) || delta > 1.0) {
    throw std::domain_error(
        "lower_bound_measure: need mu > 0 and delta in (0, 1]");
  }
  double v = 4.0 / mu * std::asin(std::sqrt(delta / 2.0));
  return std::min(kTwoPi, v);
}

DirectionSet lambda_threshold_set(const FunctionSpec& f, double r,
                                  double t_of_r, int bins) {
  if (!(r >= 2.0) || !(t_of_r > 0)) {
    throw std::invalid_argument("lambda_threshold_set: need r >= 2, T(r) > 0");
  }
  const double threshold = std::sqrt(t_of_r * std::log(r));
  std::vector<char> flags(bins, 0);
  for (int b = 0; b < bins; ++b) {
    Complex z = std::polar(r, kTwoPi * b / bins);
    try {
      if (eval_log(f, z).log_mag > threshold) flags[b] = 1;
    } catch (const PoleHitError&) {
    }
  }
  return arcs_from_bins(flags);
}

}  // namespace juliadir
