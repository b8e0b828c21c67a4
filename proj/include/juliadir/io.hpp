#pragma once

#include <string>
#include <vector>

#include "juliadir/arcs.hpp"
#include "juliadir/direction.hpp"
#include "juliadir/escape.hpp"
#include "juliadir/verification.hpp"

namespace juliadir {

// Binary P6 image with the fixed fate palette: escape iterations banded
// in blue/white, bounded black, pole capture red, indeterminate gray.
void write_fate_ppm(const std::string& path, const FateGrid& grid);

void write_fate_csv(const std::string& path, const FateGrid& grid);

// One "lo,hi" row per arc, radians, full precision.
void write_arcs_csv(const std::string& path, const DirectionSet& ds);

// Rows r,theta,indicator.
void write_profile_csv(const std::string& path, const GrowthProfile& p);

// One "name passed min_slack argmin" line per report plus key=value pairs.
void write_reports(const std::string& path,
                   const std::vector<InequalityReport>& reports,
                   const std::vector<std::pair<std::string, std::string>>&
                       extra = {});

std::string format_full(double v);  // shortest round-trip decimal

}  // namespace juliadir
