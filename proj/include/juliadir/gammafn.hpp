#pragma once

namespace juliadir {

// Natural log of the Gamma function for x > 0. Throws std::domain_error
// for x <= 0. Stirling series above 12 with argument lifting below, good
// to better than 1e-13 relative on [0.5, 1e6].
double log_gamma(double x);

}  // namespace juliadir
