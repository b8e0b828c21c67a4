#include "juliadir/arcs.hpp"

#include <algorithm>
#include <cmath>

namespace juliadir {

namespace {

// Split a possibly wrapping arc [lo, lo+m] into cut-at-zero intervals.
void push_cut(std::vector<Arc>& out, double lo, double hi) {
  if (hi - lo >= kTwoPi) {
    out.push_back({0.0, kTwoPi});
    return;
  }
  if (hi <= kTwoPi) {
    out.push_back({lo, hi});
  } else {
    out.push_back({lo, kTwoPi});
    out.push_back({0.0, hi - kTwoPi});
  }
}

}  // namespace

DirectionSet DirectionSet::from_arcs(const std::vector<Arc>& arcs) {
  std::vector<Arc> cut;
  for (const Arc& a : arcs) {
    double m = a.measure();
    if (m >= kTwoPi) {
      DirectionSet full;
      full.parts_.push_back({0.0, kTwoPi});
      return full;
    }
    double lo = wrap_angle(a.lo);
    push_cut(cut, lo, lo + m);
  }

  std::sort(cut.begin(), cut.end(),
            [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  DirectionSet ds;
  for (const Arc& a : cut) {
    if (!ds.parts_.empty() && a.lo <= ds.parts_.back().hi) {
      ds.parts_.back().hi = std::max(ds.parts_.back().hi, a.hi);
    } else {
      ds.parts_.push_back(a);
    }
  }
  // A part ending at 2pi and one starting at 0 stay split in canonical
  // form; measure, distance and arcs() handle the identified seam.
  return ds;
}

DirectionSet DirectionSet::full_circle() {
  DirectionSet ds;
  ds.parts_.push_back({0.0, kTwoPi});
  return ds;
}

DirectionSet DirectionSet::empty_set() { return DirectionSet(); }

bool DirectionSet::is_full() const {
  return parts_.size() == 1 && parts_[0].lo == 0.0 && parts_[0].hi >= kTwoPi;
}

double DirectionSet::measure() const {
  double m = 0;
  for (const Arc& a : parts_) m += a.hi - a.lo;
  return std::min(m, kTwoPi);
}

bool DirectionSet::contains(double theta) const {
  theta = wrap_angle(theta);
  for (const Arc& a : parts_) {
    if (theta >= a.lo && theta <= a.hi) return true;
    // the seam: 0 belongs to a part ending at 2pi
    if (theta == 0.0 && a.hi >= kTwoPi) return true;
  }
  return false;
}

std::vector<Arc> DirectionSet::arcs() const {
  if (parts_.empty() || is_full()) return parts_;
  std::vector<Arc> out = parts_;
  if (out.size() >= 2 && out.front().lo == 0.0 && out.back().hi >= kTwoPi) {
    Arc joined{out.back().lo, out.front().hi};
    out.erase(out.begin());
    out.pop_back();
    out.push_back(joined);
  }
  return out;
}

DirectionSet DirectionSet::intersect(const DirectionSet& a,
                                     const DirectionSet& b) {
  std::vector<Arc> out;
  size_t i = 0, j = 0;
  const auto& pa = a.parts_;
  const auto& pb = b.parts_;
  while (i < pa.size() && j < pb.size()) {
    double lo = std::max(pa[i].lo, pb[j].lo);
    double hi = std::min(pa[i].hi, pb[j].hi);
    if (hi >= lo) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i;
    else ++j;
  }
  DirectionSet ds;
  ds.parts_ = out;
  return ds;
}

double DirectionSet::distance(const DirectionSet& a, const DirectionSet& b) {
  double inter = intersect(a, b).measure();
  double d = a.measure() + b.measure() - 2.0 * inter;
  return std::max(0.0, d);
}

DirectionSet arcs_from_bins(const std::vector<char>& flags,
                            int gap_tolerance) {
  const int b = static_cast<int>(flags.size());
  if (b == 0) return DirectionSet::empty_set();
  const double w = kTwoPi / b;

  int occupied = 0;
  for (char f : flags) occupied += (f != 0);
  if (occupied == 0) return DirectionSet::empty_set();
  if (occupied == b) return DirectionSet::full_circle();

  // Collect maximal runs with gap tolerance, scanning circularly from the
  // first occupied bin after a long-enough gap.
  int start = -1;
  for (int i = 0; i < b && start < 0; ++i) {
    if (!flags[i]) continue;
    bool gap_before = true;
    for (int g = 1; g <= gap_tolerance; ++g) {
      if (flags[((i - g) % b + b) % b]) gap_before = false;
    }
    if (gap_before) start = i;
  }
  if (start < 0) return DirectionSet::full_circle();  // everything bridged

  std::vector<Arc> arcs;
  int run_begin = -1, last_occ = -1;
  for (int k = 0; k < b; ++k) {
    int i = (start + k) % b;
    if (flags[i]) {
      if (run_begin < 0) {
        run_begin = start + k;
      }
      last_occ = start + k;
    } else if (run_begin >= 0 && start + k - last_occ > gap_tolerance) {
      arcs.push_back({wrap_angle(run_begin * w),
                      wrap_angle(run_begin * w) + (last_occ - run_begin + 1) * w});
      run_begin = -1;
    }
  }
  if (run_begin >= 0) {
    arcs.push_back({wrap_angle(run_begin * w),
                    wrap_angle(run_begin * w) + (last_occ - run_begin + 1) * w});
  }
  return DirectionSet::from_arcs(arcs);
}

double arc_union_measure(const DirectionSet& ds) { return ds.measure(); }

double direction_set_distance(const DirectionSet& a, const DirectionSet& b) {
  return DirectionSet::distance(a, b);
}

}  // namespace juliadir
