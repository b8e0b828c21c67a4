#pragma once

#include <vector>

#include "juliadir/numerics.hpp"

namespace juliadir {

// Closed arc of the circle, counterclockwise from lo to hi.
// lo is in [0, 2pi); hi is in [0, 2pi]. hi < lo means the arc wraps
// through the identified endpoint 0 ~ 2pi.
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double measure() const {
    double m = (hi >= lo) ? hi - lo : hi + kTwoPi - lo;
    if (m < 0) m = 0;
    if (m > kTwoPi) m = kTwoPi;
    return m;
  }
};

// Finite union of closed arcs with endpoints 0 and 2pi identified.
// Canonical form: sorted, pairwise disjoint, non-touching intervals
// [lo, hi] with 0 <= lo < hi <= 2pi. The full circle is [0, 2pi].
class DirectionSet {
 public:
  DirectionSet() = default;

  static DirectionSet from_arcs(const std::vector<Arc>& arcs);
  static DirectionSet full_circle();
  static DirectionSet empty_set();

  bool empty() const { return parts_.size() == 0; }
  bool is_full() const;
  double measure() const;
  bool contains(double theta) const;

  // Canonical cut-at-zero interval list.
  const std::vector<Arc>& parts() const { return parts_; }

  // Presentation form: if the set touches the seam on both sides the two
  // pieces are re-joined into one wrapped arc.
  std::vector<Arc> arcs() const;

  static DirectionSet intersect(const DirectionSet& a, const DirectionSet& b);

  // Lebesgue measure of the symmetric difference. A pseudometric.
  static double distance(const DirectionSet& a, const DirectionSet& b);

 private:
  std::vector<Arc> parts_;
};

// Merge occupied bins into closed arcs. Bin b covers
// [b*2pi/B, (b+1)*2pi/B]. Runs of occupied bins separated by at most
// gap_tolerance unoccupied bins (wrapping around) are merged, the gap
// included. The result is the closure of the occupied bins.
DirectionSet arcs_from_bins(const std::vector<char>& flags,
                            int gap_tolerance = 1);

double arc_union_measure(const DirectionSet& ds);
double direction_set_distance(const DirectionSet& a, const DirectionSet& b);

}  // namespace juliadir
