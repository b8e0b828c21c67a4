#pragma once

#include <vector>

#include "juliadir/arcs.hpp"
#include "juliadir/poles.hpp"
#include "juliadir/zoo.hpp"

namespace juliadir {

// Per-(radius, direction-bin) growth indicators log|f(r e^{i theta})| / log r.
// theta_b = 2 pi b / B, so the rays 0 and pi are sampled exactly.
struct GrowthProfile {
  std::vector<double> radii;  // strictly increasing, >= 2
  int bins = 0;
  std::vector<double> indicator;  // bins x radii, row-major [b * nr + i]
  std::vector<char> flagged;      // pole-adjacent samples

  double at(int b, int i) const { return indicator[(size_t)b * radii.size() + i]; }
  bool is_flagged(int b, int i) const { return flagged[(size_t)b * radii.size() + i] != 0; }
};

GrowthProfile sample_growth_profile(const FunctionSpec& f,
                                    const std::vector<double>& radii, int bins,
                                    int threads = 1);

// Bins whose indicator exceeds tau at the top radius and is non-decreasing
// over the top three radii, closed up into arcs.
DirectionSet estimate_td(const GrowthProfile& profile, double tau = 20.0);

enum class OrderMethod { MaxModulus, PoleCounting };

struct OrderEstimate {
  double rho_hat = 0.0;
  std::vector<std::pair<double, double>> samples;  // (ln r, ln functional)
  OrderMethod method = OrderMethod::MaxModulus;
};

// Order of an entire function from ln ln M(r) vs ln r over the top half
// of the radii. Throws on a degenerate fit (ln M <= 0 somewhere).
OrderEstimate estimate_order_entire(const FunctionSpec& f,
                                    const std::vector<double>& radii,
                                    int bins = 360);

// Order from the integrated pole count N(r) = sum m_k ln(r / r_k).
OrderEstimate estimate_order_from_poles(const PoleConfiguration& config,
                                        const std::vector<double>& radii);

// Pole count n(r) = sum of multiplicities with r_k <= r (exact when all
// contributing multiplicities are exact).
BigUint pole_count_exact(const PoleConfiguration& config, double r);
double pole_count_log(const PoleConfiguration& config, double r);

// min(2pi, (4/mu) asin(sqrt(delta/2)))
double lower_bound_measure(double mu, double delta);

// Bins where log|f| exceeds sqrt(T(r) log r) on the circle of radius r.
DirectionSet lambda_threshold_set(const FunctionSpec& f, double r,
                                  double t_of_r, int bins);

}  // namespace juliadir
