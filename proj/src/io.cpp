#include "juliadir/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace juliadir {

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void fate_rgb(const Fate& f, long max_iter, unsigned char* rgb) {
  switch (f.kind) {
    case FateKind::Bounded:
      rgb[0] = rgb[1] = rgb[2] = 0;
      return;
    case FateKind::PoleCapture:
      rgb[0] = 200;
      rgb[1] = 30;
      rgb[2] = 30;
      return;
    case FateKind::Indeterminate:
      rgb[0] = rgb[1] = rgb[2] = 128;
      return;
    case FateKind::Escaped: {
      unsigned band = static_cast<unsigned>(f.at_iter % 32);
      unsigned char v = static_cast<unsigned char>(64 + band * 6);
      rgb[0] = v;
      rgb[1] = v;
      rgb[2] = 255;
      (void)max_iter;
      return;
    }
  }
}

std::ofstream open_or_throw(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_fate_ppm(const std::string& path, const FateGrid& grid) {
  auto out = open_or_throw(path, true);
  out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(grid.width) * 3);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      fate_rgb(grid.at(x, y), 0, &row[3 * (size_t)x]);
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
}

namespace {

const char* fate_name(FateKind k) {
  switch (k) {
    case FateKind::Escaped: return "escaped";
    case FateKind::Bounded: return "bounded";
    case FateKind::PoleCapture: return "pole-capture";
    default: return "indeterminate";
  }
}

}  // namespace

void write_fate_csv(const std::string& path, const FateGrid& grid) {
  auto out = open_or_throw(path);
  out << "ix,iy,kind,at_iter\n";
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Fate& f = grid.at(x, y);
      out << x << "," << y << "," << fate_name(f.kind) << "," << f.at_iter
          << "\n";
    }
  }
}

void write_arcs_csv(const std::string& path, const DirectionSet& ds) {
  auto out = open_or_throw(path);
  out << "lo,hi\n";
  for (const Arc& a : ds.arcs()) {
    out << format_full(a.lo) << "," << format_full(a.hi) << "\n";
  }
}

void write_profile_csv(const std::string& path, const GrowthProfile& p) {
  auto out = open_or_throw(path);
  out << "r,theta,indicator\n";
  for (int b = 0; b < p.bins; ++b) {
    double theta = kTwoPi * b / p.bins;
    for (size_t i = 0; i < p.radii.size(); ++i) {
      out << format_full(p.radii[i]) << "," << format_full(theta) << ","
          << (p.is_flagged(b, (int)i) ? "flagged" : format_full(p.at(b, (int)i)))
          << "\n";
    }
  }
}

void write_reports(const std::string& path,
                   const std::vector<InequalityReport>& reports,
                   const std::vector<std::pair<std::string, std::string>>&
                       extra) {
  auto out = open_or_throw(path);
  for (const auto& r : reports) {
    out << r.name << " " << (r.passed ? "passed" : "FAILED") << " "
        << format_full(r.min_slack) << " argmin=(" << format_full(r.argmin_r)
        << "," << format_full(r.argmin_t) << ")\n";
  }
  for (const auto& [k, v] : extra) out << k << "=" << v << "\n";
}

}  // namespace juliadir
