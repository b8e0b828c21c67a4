#include "juliadir/gammafn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace juliadir {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "log_gamma: argument must be positive, got " << x;
    throw std::domain_error(os.str());
  }

  // Lift into [12, 13) via lnG(x) = lnG(x+1) - ln(x).
  double shift = 0.0;
  while (x < 12.0) {
    shift += std::log(x);
    x += 1.0;
  }

  // Stirling series, B_{2n}/(2n(2n-1)x^{2n-1}).
  static const double c[8] = {
      1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};
  const double inv2 = 1.0 / (x * x);
  double series = c[7];
  for (int i = 6; i >= 0; --i) series = series * inv2 + c[i];
  series /= x;

  static const double half_log_two_pi = 0.91893853320467274178032973640562;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

}  // namespace juliadir
