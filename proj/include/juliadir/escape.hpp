#pragma once

#include <string>
#include <vector>

#include "juliadir/arcs.hpp"
#include "juliadir/zoo.hpp"

namespace juliadir {

enum class FateKind { Escaped, Bounded, PoleCapture, Indeterminate };

struct Fate {
  FateKind kind = FateKind::Indeterminate;
  long at_iter = 0;

  bool operator==(const Fate&) const = default;
};

struct EscapeParams {
  long max_iter = 500;
  double escape_radius = 1e6;     // generic modulus escape
  double exp_re_bound = 50.0;     // exponential family: Re z beyond this
  double petal_re_escape = -50.0; // petal map: real escape channel
  double pole_eps = 1e-9;         // pole capture distance
  double fix_eps = 1e-13;         // fixed-point capture step size (exp family)
};

Fate classify_orbit(const FunctionSpec& f, const Complex& z0, long max_iter,
                    const EscapeParams& params = {});

struct FateGrid {
  int width = 0, height = 0;
  Complex center;
  double window_w = 0, window_h = 0;
  std::vector<Fate> cells;  // row-major, row 0 at top (largest Im)

  const Fate& at(int ix, int iy) const { return cells[(size_t)iy * width + ix]; }
};

FateGrid render_fate_grid(const FunctionSpec& f, const Complex& center,
                          double window_w, double window_h, int width,
                          int height, long max_iter,
                          const EscapeParams& params = {}, int threads = 1);

struct Annulus {
  double r_lo = 0, r_hi = 0;
};

enum class LMode { Boundary, PoleCluster };

// Directions where the Julia set appears to reach out to infinity.
//
// Boundary mode classifies a polar grid on each annulus and flags bins
// containing cells adjacent (forward differences) to a cell of different
// fate kind, or of escape time differing by at least two, restricted to
// the outermost two annuli. PoleCluster mode flags bins within angular
// half-width asin(2/r_k) of a pole in the annulus range.
DirectionSet estimate_l(const FunctionSpec& f, const std::vector<Annulus>& annuli,
                        int bins, LMode mode, long max_iter = 500,
                        int radial_samples = 48, const EscapeParams& params = {},
                        int threads = 1);

struct QuadrantRegion {
  enum class Kind { UpperRight, LowerRight } kind = Kind::UpperRight;
  double l = 1.0;  // UpperRight: {Re >= L, Im >= L}; LowerRight: {Re >= L, Im <= -L}

  bool contains(const Complex& z) const {
    if (z.real() < l) return false;
    return kind == Kind::UpperRight ? z.imag() >= l : z.imag() <= -l;
  }
};

struct InvarianceReport {
  long samples = 0;
  std::vector<Complex> violations;  // points whose image left the region
  double min_slack = 0.0;           // min over samples of distance-into-region
  Complex argmin;
};

// Checks f(region) stays in region on quasi-random interior points plus
// the boundary edge curves (R+t) + iR and R + i(R+t) over an (R, t) grid.
InvarianceReport check_forward_invariance(const FunctionSpec& f,
                                          const QuadrantRegion& region,
                                          long n_samples, double r_max);

// Nonnegative real magnitude exp^(level)(value): level 0 stores the value
// itself, level k stores exp iterated k times. Orbits of the petal map
// blow up as towers; ordinary floats die after one squaring step.
struct TowerReal {
  int level = 0;
  double value = 0.0;

  static TowerReal from_value(double v) { return {0, v}; }
  TowerReal exp_of() const {
    if (level == 0 && value <= 700.0) return {0, std::exp(value)};
    return {level + 1, value};
  }
  // lexicographic on (level after normalization, value)
  bool operator<(const TowerReal& o) const;
  double as_double() const {  // +inf when beyond range
    return level == 0 ? value : kInf;
  }
};

struct RealOrbitStep {
  int sign = -1;          // sign of the iterate
  TowerReal log_abs;      // log |f^n(x)|
  bool log_mode = false;  // true once the recurrence left value domain
};

struct RealOrbitTrack {
  std::vector<RealOrbitStep> steps;
  // divergence indicators d_n = log|f^{n+1}| - |f^n|/2, one per log-mode step
  std::vector<TowerReal> divergence;
  bool divergence_increasing = false;
};

// Iterates the petal map from a real start. Switches to the log-domain
// recurrence log|f^{n+1}| = |f^n| - 3 log|f^n| + eps once |x| > 500 and
// tracks tower magnitudes from there.
RealOrbitTrack track_real_orbit_log(double x0, int n);

}  // namespace juliadir
