#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "juliadir/zoo.hpp"

namespace juliadir {

// Flat key/value configuration with dotted keys:
//   function.variant = exponential
//   radii.start = 50000
// '#' starts a comment; whitespace around keys and values is trimmed.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  void set(const std::string& key, const std::string& value) {
    kv_[key] = value;
  }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  std::string require_string(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  long get_long(const std::string& key, long fallback) const;
  std::vector<double> get_doubles(const std::string& key) const;  // comma list

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Builds the function described by the function.* keys. Understands the
// variants exponential, mittag-leffler, strip-model, rotated-strip,
// strip-sum, pole-series, petal, petal-component.
FunctionSpec function_from_config(const Config& cfg);

// Radii list from radii.list or the (radii.start, radii.multiplier,
// radii.count) geometric schedule.
std::vector<double> radii_from_config(const Config& cfg);

std::vector<std::pair<double, double>> annuli_from_config(const Config& cfg);

}  // namespace juliadir
