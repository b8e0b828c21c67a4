#include "juliadir/escape.hpp"

#include <algorithm>
#include <cmath>

#include "juliadir/parallel.hpp"

namespace juliadir {

namespace {

constexpr double kInvSqrt3 = 0.5773502691896258;

// Fate already decided by where z sits, before evaluating f there.
// Returns true and fills `out` when the orbit can stop.
bool pre_step_fate(const FunctionSpec& f, const Complex& z, long iter,
                   const EscapeParams& p, Fate& out) {
  double x = z.real(), y = z.imag();
  if (!std::isfinite(x) || !std::isfinite(y)) {
    out = {FateKind::Escaped, iter};  // overflow on the way out
    return true;
  }
  if (std::holds_alternative<Exponential>(f)) {
    if (x > p.exp_re_bound) {
      out = {FateKind::Escaped, iter};
      return true;
    }
    return false;
  }
  if (std::holds_alternative<PetalMap>(f)) {
    if (x < p.petal_re_escape || std::abs(z) > p.escape_radius) {
      out = {FateKind::Escaped, iter};
      return true;
    }
    // Sealed capture: once safely inside the right-half quadrant flow of
    // z - z^-3, the orbit drifts to the invariant quadrant regions and
    // never returns (the invariance suite verifies the target regions).
    double ay = std::abs(y);
    if ((x >= 7.0 && ay >= x * kInvSqrt3) || (x >= 16.0 && ay >= 1.0)) {
      out = {FateKind::Bounded, iter};
      return true;
    }
    return false;
  }
  if (const auto* ps = std::get_if<PoleSeries>(&f)) {
    if (std::abs(z) > p.escape_radius) {
      out = {FateKind::Escaped, iter};
      return true;
    }
    for (const auto& e : ps->config.entries) {
      if (std::isfinite(e.a.real()) && std::abs(z - e.a) < p.pole_eps) {
        out = {FateKind::PoleCapture, iter};
        return true;
      }
    }
    return false;
  }
  if (std::abs(z) > p.escape_radius) {
    out = {FateKind::Escaped, iter};
    return true;
  }
  return false;
}

}  // namespace

Fate classify_orbit(const FunctionSpec& f, const Complex& z0, long max_iter,
                    const EscapeParams& params) {
  if (max_iter < 1) throw std::invalid_argument("classify_orbit: max_iter < 1");
  Complex z = z0;
  const bool exp_family = std::holds_alternative<Exponential>(f);
  for (long n = 0; n <= max_iter; ++n) {
    Fate fate;
    if (pre_step_fate(f, z, n, params, fate)) return fate;
    if (n == max_iter) break;
    Complex next;
    try {
      next = eval_value(f, z);
    } catch (const PoleHitError&) {
      return {FateKind::PoleCapture, n};
    } catch (const NonConvergenceError&) {
      return {FateKind::Indeterminate, n};
    }
    if (std::isnan(next.real()) || std::isnan(next.imag())) {
      return {FateKind::Indeterminate, n};
    }
    if (exp_family && std::abs(next - z) < params.fix_eps) {
      return {FateKind::Bounded, n};  // converged to an attracting point
    }
    z = next;
  }
  return {FateKind::Bounded, max_iter};
}

FateGrid render_fate_grid(const FunctionSpec& f, const Complex& center,
                          double window_w, double window_h, int width,
                          int height, long max_iter, const EscapeParams& params,
                          int threads) {
  if (width < 16 || height < 16) {
    throw std::invalid_argument("render_fate_grid: resolution below 16x16");
  }
  FateGrid g;
  g.width = width;
  g.height = height;
  g.center = center;
  g.window_w = window_w;
  g.window_h = window_h;
  g.cells.assign((size_t)width * height, Fate{});
  parallel_for(height, threads, [&](long iy) {
    for (int ix = 0; ix < width; ++ix) {
      Complex z(center.real() + ((ix + 0.5) / width - 0.5) * window_w,
                center.imag() + (0.5 - (iy + 0.5) / height) * window_h);
      g.cells[(size_t)iy * width + ix] = classify_orbit(f, z, max_iter, params);
    }
  });
  return g;
}

namespace {

bool j_adjacent_pair(const Fate& a, const Fate& b) {
  if (a.kind != b.kind) return true;
  if (a.kind == FateKind::Escaped && std::abs(a.at_iter - b.at_iter) >= 2) {
    return true;  // escape-time jump marks chaotic speckle
  }
  return false;
}

}  // namespace

DirectionSet estimate_l(const FunctionSpec& f, const std::vector<Annulus>& annuli,
                        int bins, LMode mode, long max_iter, int radial_samples,
                        const EscapeParams& params, int threads) {
  if (annuli.empty()) throw std::invalid_argument("estimate_l: no annuli");
  for (size_t i = 0; i < annuli.size(); ++i) {
    if (!(annuli[i].r_lo > 0) || !(annuli[i].r_hi > annuli[i].r_lo)) {
      throw std::invalid_argument("estimate_l: bad annulus");
    }
    if (i && annuli[i].r_lo < annuli[i - 1].r_lo) {
      throw std::invalid_argument("estimate_l: annuli radii must increase");
    }
  }

  std::vector<char> flags(bins, 0);

  if (mode == LMode::PoleCluster) {
    const auto* ps = std::get_if<PoleSeries>(&f);
    if (!ps) throw std::invalid_argument("estimate_l: PoleCluster needs a pole series");
    for (const auto& an : annuli) {
      for (const auto& e : ps->config.entries) {
        double r = std::exp(e.log_r);
        if (!(r >= an.r_lo && r <= an.r_hi)) continue;
        double half = std::asin(std::min(1.0, 2.0 / r));
        // bins whose sampled ray b*2pi/B lies within half of the pole angle
        int lo = (int)std::ceil((e.theta - half) / kTwoPi * bins - 1e-9);
        int hi = (int)std::floor((e.theta + half) / kTwoPi * bins + 1e-9);
        for (int b = lo; b <= hi; ++b) flags[((b % bins) + bins) % bins] = 1;
      }
    }
    return arcs_from_bins(flags);
  }
  if (std::holds_alternative<PoleSeries>(f)) {
    throw std::invalid_argument("estimate_l: Boundary mode needs an entire-type spec");
  }

  // Boundary mode: polar fate grids, flags from the outermost two annuli.
  size_t first = annuli.size() > 2 ? annuli.size() - 2 : 0;
  for (size_t ai = first; ai < annuli.size(); ++ai) {
    const Annulus& an = annuli[ai];
    const int nr = radial_samples;
    std::vector<Fate> grid((size_t)bins * nr);
    const double lratio = std::log(an.r_hi / an.r_lo);
    parallel_for(bins, threads, [&](long b) {
      for (int i = 0; i < nr; ++i) {
        double r = an.r_lo * std::exp(lratio * i / (nr - 1));
        Complex z = std::polar(r, kTwoPi * b / bins);
        grid[(size_t)b * nr + i] = classify_orbit(f, z, max_iter, params);
      }
    });
    for (int b = 0; b < bins; ++b) {
      for (int i = 0; i < nr; ++i) {
        const Fate& c = grid[(size_t)b * nr + i];
        const Fate& right = grid[(size_t)((b + 1) % bins) * nr + i];
        if (j_adjacent_pair(c, right)) {
          flags[b] = 1;
          break;
        }
        if (i + 1 < nr && j_adjacent_pair(c, grid[(size_t)b * nr + i + 1])) {
          flags[b] = 1;
          break;
        }
      }
    }
  }
  return arcs_from_bins(flags);
}

InvarianceReport check_forward_invariance(const FunctionSpec& f,
                                          const QuadrantRegion& region,
                                          long n_samples, double r_max) {
  if (!(region.l >= 1.0)) {
    throw std::invalid_argument("check_forward_invariance: region.l must be >= 1");
  }
  InvarianceReport rep;
  rep.min_slack = kInf;
  const double sgn = region.kind == QuadrantRegion::Kind::UpperRight ? 1.0 : -1.0;

  auto visit = [&](const Complex& z) {
    Complex w = eval_value(f, z);
    double slack = std::min(w.real() - region.l, sgn * w.imag() - region.l);
    ++rep.samples;
    if (slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.argmin = z;
    }
    if (slack < 0) rep.violations.push_back(z);
  };

  // Low-discrepancy interior samples (2,3-Halton in the quadrant square).
  auto halton = [](long i, int base) {
    double f1 = 1.0, r = 0.0;
    while (i > 0) {
      f1 /= base;
      r += f1 * (i % base);
      i /= base;
    }
    return r;
  };
  long placed = 0, tries = 0;
  while (placed < n_samples && tries < 20 * n_samples) {
    ++tries;
    double u = halton(tries, 2), v = halton(tries, 3);
    Complex z(region.l + u * (r_max - region.l),
              sgn * (region.l + v * (r_max - region.l)));
    if (std::abs(z) > r_max) continue;
    visit(z);
    ++placed;
  }

  // Boundary edge curves (R+t) + iR and R + i(R+t), t up to 10R.
  for (double r = region.l; r <= r_max / 2; r *= 1.25) {
    for (double frac : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      double t = frac * r;
      visit(Complex(r + t, sgn * r));
      visit(Complex(r, sgn * (r + t)));
    }
  }
  return rep;
}

bool TowerReal::operator<(const TowerReal& o) const {
  // Collapse level-k representations of small values before comparing.
  auto norm = [](TowerReal t) {
    while (t.level > 0 && t.value <= 700.0) {
      t.value = std::exp(t.value);
      --t.level;
      if (t.value > 700.0) break;
    }
    return t;
  };
  TowerReal a = norm(*this), b = norm(o);
  if (a.level != b.level) return a.level < b.level;
  return a.value < b.value;
}

RealOrbitTrack track_real_orbit_log(double x0, int n) {
  RealOrbitTrack track;
  double x = x0;
  // The log recurrence models the negative escape channel; positive
  // iterates crawl down in value domain, which doubles handle fine.
  bool log_mode = x < -500.0;
  int sign = x0 < 0 ? -1 : 1;
  TowerReal prev_abs_log =
      TowerReal::from_value(log_mode ? std::log(-x) : 0.0);

  for (int i = 0; i < n; ++i) {
    if (!log_mode) {
      double next = eval_petal(Complex(x, 0.0)).real();
      sign = next < 0 ? -1 : 1;
      double a = std::abs(next);
      track.steps.push_back(
          {sign, TowerReal::from_value(a > 0 ? std::log(a) : kNegInf), false});
      x = next;
      if (x < -500.0) {
        log_mode = true;
        prev_abs_log = TowerReal::from_value(std::log(-x));
      }
      continue;
    }
    // log|f^{n+1}| = |f^n| - 3 log|f^n| + log-corrections; the iterate
    // stays on the negative axis. Corrections fall below double precision
    // immediately, so only the first form carries them.
    TowerReal cur = prev_abs_log;
    TowerReal next_log;
    if (cur.level == 0 && cur.value <= 700.0) {
      double absx = std::exp(cur.value);
      // exact small-step form while |x| is representable
      double corr = std::log1p(-std::exp(-absx)) -
                    std::log1p(4.0 * kPi * kPi / (absx * absx));
      next_log = TowerReal::from_value(absx - 3.0 * cur.value + corr);
    } else {
      // |f^n| dwarfs every logarithmic correction: log|f^{n+1}| = |f^n|
      next_log = cur.exp_of();
    }
    sign = -1;
    track.steps.push_back({sign, next_log, true});

    // d_n = log|f^{n+1}| - |f^n| / 2. At these scales the difference is
    // |f^n|/2 to double precision; represent it as the tower |f^n| with
    // its top halved when that is expressible.
    TowerReal abs_fn = cur.exp_of();
    TowerReal d;
    if (next_log.level == 0 && abs_fn.level == 0) {
      d = TowerReal::from_value(next_log.value - abs_fn.value / 2.0);
    } else if (abs_fn.level == 0) {
      d = next_log;  // next_log dominates entirely
    } else {
      d = abs_fn;
      if (d.level == 1 && d.value <= 700.0) {
        d = TowerReal::from_value(std::exp(d.value) / 2.0);
      }
    }
    track.divergence.push_back(d);
    prev_abs_log = next_log;
  }

  track.divergence_increasing = true;
  for (size_t i = 1; i < track.divergence.size(); ++i) {
    if (!(track.divergence[i - 1] < track.divergence[i])) {
      track.divergence_increasing = false;
    }
  }
  return track;
}

}  // namespace juliadir
