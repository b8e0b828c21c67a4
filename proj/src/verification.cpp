#include "juliadir/verification.hpp"

#include <algorithm>
#include <cmath>

namespace juliadir {

namespace {
constexpr double kLn2 = 0.6931471805599453;

std::vector<double> t_values(double r, const std::vector<double>& fractions) {
  std::vector<double> ts;
  for (double f : fractions) ts.push_back(f * r);
  for (double m : {0.5, 1.0, 2.0, 5.0, 10.0}) ts.push_back(m * r);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

Complex edge_horizontal(double r, double t) { return {r + t, r}; }
Complex edge_vertical(double r, double t) { return {r, r + t}; }

std::vector<double> default_r_grid() {
  std::vector<double> g;
  for (double r = 5; r <= 200; r += 5) g.push_back(r);
  return g;
}

std::vector<double> default_t_fractions() {
  return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
}

EdgeMappingSuite check_lemma5(const std::vector<double>& r_grid,
                              const std::vector<double>& t_fractions) {
  if (r_grid.empty() || t_fractions.empty()) {
    throw std::invalid_argument("check_lemma5: empty grid");
  }
  EdgeMappingSuite suite;
  suite.reports.assign(6, {});
  suite.reports[0].name = "re_f_horizontal";
  suite.reports[1].name = "im_f_horizontal_near";
  suite.reports[2].name = "im_f_horizontal_far";
  suite.reports[3].name = "im_f_vertical";
  suite.reports[4].name = "re_f_vertical_near";
  suite.reports[5].name = "re_f_vertical_far";

  std::vector<char> r_pass(r_grid.size(), 1);
  for (size_t ri = 0; ri < r_grid.size(); ++ri) {
    const double r = r_grid[ri];
    for (double t : t_values(r, t_fractions)) {
      Complex fh = eval_petal(edge_horizontal(r, t));
      Complex fv = eval_petal(edge_vertical(r, t));
      double near_bound = r + 1.0 / (10.0 * r * r * r);
      double far_bound = (t > 0) ? r + 1.0 / (5.0 * t * t * t) : kInf;

      double s0 = fh.real() - (r + 1.0 / (50.0 * r * r * r));
      suite.reports[0].account(s0, r, t);
      if (s0 < -1e-9) r_pass[ri] = 0;
      if (t <= r / 2) {
        double s1 = fh.imag() - near_bound;
        suite.reports[1].account(s1, r, t);
        if (s1 < -1e-9) r_pass[ri] = 0;
      }
      if (t >= r / 2) {
        double s2 = fh.imag() - far_bound;
        suite.reports[2].account(s2, r, t);
        if (s2 < -1e-9) r_pass[ri] = 0;
      }

      double s3 = fv.imag() - (r + 1.0 / (50.0 * r * r * r));
      suite.reports[3].account(s3, r, t);
      if (s3 < -1e-9) r_pass[ri] = 0;
      if (t <= r / 2) {
        double s4 = fv.real() - near_bound;
        suite.reports[4].account(s4, r, t);
        if (s4 < -1e-9) r_pass[ri] = 0;
      }
      if (t >= r / 2) {
        double s5 = fv.real() - far_bound;
        suite.reports[5].account(s5, r, t);
        if (s5 < -1e-9) r_pass[ri] = 0;
      }
    }
  }
  for (auto& rep : suite.reports) {
    rep.grid = "R in given grid, t = fractions*R plus {R/2,R,2R,5R,10R}";
    rep.finish();
  }
  // least grid R from which every larger grid R passes all six
  for (size_t ri = 0; ri < r_grid.size(); ++ri) {
    bool all = true;
    for (size_t j = ri; j < r_grid.size(); ++j) all = all && r_pass[j];
    if (all) {
      suite.l0 = r_grid[ri];
      break;
    }
  }
  return suite;
}

std::vector<InequalityReport> check_component_bounds(double r, double t,
                                                     int curve) {
  if (!(r >= 10.0)) {
    throw std::invalid_argument("check_component_bounds: r must be >= 10");
  }
  if (curve != 1 && curve != 2) {
    throw std::invalid_argument("check_component_bounds: curve must be 1 or 2");
  }
  Complex z = curve == 1 ? edge_horizontal(r, t) : edge_vertical(r, t);
  auto g = eval_petal_components(z);
  Complex g1 = g[0].to_complex();
  double g2_abs = std::exp(g[1].log_mag);
  double g3_abs = std::exp(g[2].log_mag);
  const double r3 = r * r * r;

  std::vector<InequalityReport> reps;
  auto push = [&](const std::string& name, double slack) {
    InequalityReport rep;
    rep.name = name;
    rep.grid = "single point";
    rep.account(slack, r, t);
    rep.finish();
    reps.push_back(rep);
  };

  // exponential tail
  double g2_bound = (curve == 1) ? std::exp(-(r + t)) / r3 : std::exp(-r) / r3;
  push("g2_decay", g2_bound - g2_abs);

  // rational tail
  if (t <= r / 2) {
    push("g3_decay_near", 25.0 / (r3 * r * r) - g3_abs);
  }
  if (t >= r / 2) {
    push("g3_decay_far", 98.0 / std::pow(t, 5) - g3_abs);
  }

  // drift of z - z^-3 along the curves: "along" is the coordinate the
  // curve parameter runs in, "across" the one pinned at R
  double along = curve == 1 ? g1.real() - r : g1.imag() - r;
  double across = curve == 1 ? g1.imag() - r : g1.real() - r;
  if (t <= r / 2) {
    push("g1_along_near", along - 1.0 / (46.0 * r3));
    push("g1_across_near", across - 1.0 / (6.0 * r3));
  }
  if (t >= r / 2) {
    push("g1_along_far", along - r / 3.0);
    push("g1_across_far", across - 1.0 / (4.0 * t * t * t));
  }
  return reps;
}

std::vector<InequalityReport> check_coefficient_constraints(
    const CoefficientPlan& plan, int coarse_grid) {
  std::vector<InequalityReport> reps;

  for (size_t k = 1; k < plan.directions.size(); ++k) {
    InequalityReport rep;
    rep.name = "coeff_scale_k" + std::to_string(k);
    rep.grid = "10x finer overlap grid";
    double sup = overlap_sup_log(plan.directions, (int)k, plan.c_bound,
                                 plan.log_lambda0, coarse_grid * 10);
    // |a_{k+1} f_{k+1}| <= 2^-k on the overlap
    double lhs = (sup == kNegInf) ? kNegInf : plan.coeff_logs[k] + sup;
    double slack = -(double)k * kLn2 - lhs;
    if (lhs == kNegInf) slack = (double)k * kLn2;  // empty overlap
    rep.account(slack, (double)k, 0.0);
    rep.finish();
    reps.push_back(rep);
  }

  {
    InequalityReport rep;
    rep.name = "c_r0_third";
    rep.grid = "constants";
    rep.account(1.0 / 3.0 - plan.c_bound / (plan.r0 * plan.r0), plan.r0, 0.0);
    rep.finish();
    reps.push_back(rep);
  }
  {
    InequalityReport rep;
    rep.name = "two_rprime_r0";
    rep.grid = "constants";
    rep.account(plan.r0 - 2.0 * plan.r_prime, plan.r0, 0.0);
    rep.finish();
    reps.push_back(rep);
  }
  return reps;
}

PoleInvariantReport check_pole_invariants(const PoleConfiguration& config) {
  PoleInvariantReport out;

  // exact recursion m_{k+1} = 2^{sum m_j} on the exact prefix
  {
    InequalityReport rep;
    rep.name = "multiplicity_recursion_exact";
    rep.grid = "exact prefix";
    bool ok = true;
    if (config.source == "paper-recursion") {
      BigUint sum(0);
      int k = 0;
      for (const auto& e : config.entries) {
        if (!e.m_exact) break;
        ++k;
        if (k == 1) {
          ok = ok && (*e.m_exact == BigUint(2));
        } else {
          ok = ok && (sum.fits_u64() && *e.m_exact == BigUint::pow2(sum.as_u64()));
        }
        sum += *e.m_exact;
      }
      ok = ok && k >= 1;
    }
    rep.account(ok ? 0.0 : -1.0, 0, 0);
    rep.finish();
    out.reports.push_back(rep);
  }

  // log2 m_k >= 2^{k-1} on the exact prefix
  {
    InequalityReport rep;
    rep.name = "log2_multiplicity_lower";
    rep.grid = "exact prefix";
    if (config.source == "paper-recursion") {
      int k = 0;
      for (const auto& e : config.entries) {
        if (!e.m_exact) break;
        ++k;
        double lhs = e.m_exact->fits_u64() && e.m_exact->as_u64() > 0
                         ? std::log2(e.m_exact->to_double())
                         : (double)(e.m_exact->bit_length() - 1);
        rep.account(lhs - std::pow(2.0, k - 1), k, 0);
      }
    } else {
      rep.account(0.0, 0, 0);
    }
    rep.finish();
    out.reports.push_back(rep);
  }

  // radius gaps >= 100 from some onset k0 on
  {
    InequalityReport rep;
    rep.name = "radius_gap";
    rep.grid = "all consecutive";
    std::vector<double> log_r;
    for (const auto& e : config.entries) log_r.push_back(e.log_r);
    std::sort(log_r.begin(), log_r.end());
    log_r.erase(std::unique(log_r.begin(), log_r.end()), log_r.end());
    int n = (int)log_r.size();
    auto gap_ok = [&](int j) {  // r_{j+1} - r_j >= 100, log domain safe
      double la = log_r[j], lb = log_r[j + 1];
      if (lb > 700.0) return la <= lb;  // astronomically separated
      double ra = std::exp(la), rb = std::exp(lb);
      return rb - ra >= 100.0;
    };
    out.gap_onset = n;  // none if never
    for (int k = n - 1; k >= 1; --k) {
      if (gap_ok(k - 1)) out.gap_onset = k;
      else break;
    }
    rep.account(out.gap_onset < n ? 0.0 : -1.0, out.gap_onset, 0);
    rep.finish();
    out.reports.push_back(rep);
  }

  // sampled magnitude bound away from all poles
  {
    InequalityReport rep;
    rep.name = "covering_smallness";
    rep.grid = "1e4 samples, min pole distance 2";
    PoleConfiguration usable = config.representable();
    double r_span = 4.0;
    for (const auto& e : usable.entries) r_span = std::max(r_span, std::exp(e.log_r));
    long placed = 0;
    uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed LCG sampling
    auto next_u = [&state]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return (state >> 11) * (1.0 / 9007199254740992.0);
    };
    while (placed < 10000) {
      double rr = next_u() * (r_span + 10.0);
      double th = next_u() * kTwoPi;
      Complex z = std::polar(rr, th);
      double mind = kInf;
      for (const auto& e : usable.entries) mind = std::min(mind, std::abs(z - e.a));
      if (mind < 2.0) continue;
      ++placed;
      LogComplex v = eval_pole_series(usable, 1.0, z, 1 << 20);
      rep.account(0.0 - v.log_mag, rr, th);  // log |g0| < 0 means |g0| < 1
    }
    rep.finish();
    out.reports.push_back(rep);
  }
  return out;
}

}  // namespace juliadir
