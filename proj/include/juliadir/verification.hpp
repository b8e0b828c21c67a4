#pragma once

#include <optional>
#include <string>
#include <vector>

#include "juliadir/construction.hpp"
#include "juliadir/zoo.hpp"

namespace juliadir {

struct InequalityReport {
  std::string name;
  std::string grid;
  double min_slack = kInf;
  double argmin_r = 0.0;
  double argmin_t = 0.0;  // or index k, context dependent
  bool passed = false;

  void account(double slack, double r, double t) {
    if (slack < min_slack) {
      min_slack = slack;
      argmin_r = r;
      argmin_t = t;
    }
  }
  void finish(double guard = 1e-9) { passed = min_slack >= -guard; }
};

// Boundary edge curves of the quadrant regions:
// horizontal (R+t) + iR, vertical R + i(R+t).
Complex edge_horizontal(double r, double t);
Complex edge_vertical(double r, double t);

struct EdgeMappingSuite {
  std::vector<InequalityReport> reports;  // six inequality reports
  std::optional<double> l0;  // least grid R with all six passing from there on
};

// The six curve-mapping inequalities for the petal map, swept over
// R in r_grid and t in {f*R : f in t_fractions} plus {R/2, R, 2R, 5R, 10R}:
//   Re f((R+t)+iR)  >= R + R^-3/50                      (all t)
//   Im f((R+t)+iR)  >= R + R^-3/10                      (t <= R/2)
//   Im f((R+t)+iR)  >= R + t^-3/5                       (t >= R/2)
// and the Re/Im-swapped triple on R + i(R+t).
EdgeMappingSuite check_lemma5(const std::vector<double>& r_grid,
                              const std::vector<double>& t_fractions);

std::vector<double> default_r_grid();       // 5, 10, ..., 200
std::vector<double> default_t_fractions();  // 0.0 .. 0.5 step 0.1

// Split-component bounds at a single curve point (curve 1 horizontal,
// curve 2 vertical): decay of exp(-z)/z^3, decay of the rational tail,
// and the drift bounds of z - z^-3.
std::vector<InequalityReport> check_component_bounds(double r, double t,
                                                     int curve);

// Re-verifies a coefficient plan on an independent 10x finer grid plus
// the two scaling constants.
std::vector<InequalityReport> check_coefficient_constraints(
    const CoefficientPlan& plan, int coarse_grid = 200);

// Multiplicity recursion (exact), log2 lower bound, radius gap bound with
// its empirical onset, and the sampled smallness of the pole series away
// from all poles.
struct PoleInvariantReport {
  std::vector<InequalityReport> reports;
  int gap_onset = -1;  // least k with r_{j+1} - r_j >= 100 for all j >= k
};

PoleInvariantReport check_pole_invariants(const PoleConfiguration& config);

}  // namespace juliadir
