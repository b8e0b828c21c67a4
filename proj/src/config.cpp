#include "juliadir/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "juliadir/construction.hpp"

namespace juliadir {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
    }
    cfg.kv_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

std::string Config::require_string(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw std::runtime_error("missing config key: " + key);
  return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  return std::stod(it->second);
}

double Config::require_double(const std::string& key) const {
  return std::stod(require_string(key));
}

long Config::get_long(const std::string& key, long fallback) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  return std::stol(it->second);
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  std::vector<double> out;
  auto it = kv_.find(key);
  if (it == kv_.end()) return out;
  std::istringstream in(it->second);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

namespace {

PoleConfiguration poles_from_config(const Config& cfg) {
  std::string source = cfg.get_string("function.poles.source", "paper");
  std::vector<double> dirs = cfg.get_doubles("function.poles.directions");
  if (dirs.empty()) dirs = {0.0};
  int count = (int)cfg.get_long("function.poles.count", 4);
  std::string rho_s = cfg.get_string("function.poles.rho", "1");
  if (source == "mild") {
    return mild_variant_configuration(dirs, std::stod(rho_s), count);
  }
  OrderTag tag = OrderTag::Finite;
  double rho = 1.0;
  if (rho_s == "0") tag = OrderTag::Zero;
  else if (rho_s == "inf") tag = OrderTag::Infinite;
  else rho = std::stod(rho_s);
  return build_pole_configuration(dirs, tag, rho, count);
}

}  // namespace

FunctionSpec function_from_config(const Config& cfg) {
  std::string v = cfg.require_string("function.variant");
  if (v == "exponential") {
    return Exponential{Complex(cfg.get_double("function.lambda_re", 1.0),
                               cfg.get_double("function.lambda_im", 0.0))};
  }
  if (v == "mittag-leffler") {
    return MittagLeffler{cfg.require_double("function.alpha")};
  }
  if (v == "strip-model") {
    return StripModel{cfg.get_double("function.c_bound", 1.0)};
  }
  if (v == "rotated-strip") {
    return RotatedStrip{cfg.get_double("function.theta", 0.0),
                        cfg.get_double("function.lambda_log", 0.0),
                        cfg.get_double("function.c_bound", 1.0)};
  }
  if (v == "strip-sum") {
    StripSum s;
    s.directions = cfg.get_doubles("function.directions");
    s.coeff_logs = cfg.get_doubles("function.coeff_logs");
    s.truncation = (int)cfg.get_long("function.truncation", (long)s.directions.size());
    s.lambda_log = cfg.get_double("function.lambda_log", 0.0);
    s.c_bound = cfg.get_double("function.c_bound", 1.0);
    return s;
  }
  if (v == "pole-series") {
    PoleSeries ps;
    ps.config = poles_from_config(cfg);
    ps.lambda = cfg.get_double("function.lambda", 1.0);
    ps.truncation = (int)cfg.get_long("function.truncation", 1 << 20);
    return ps;
  }
  if (v == "petal") return PetalMap{};
  if (v == "petal-component") {
    return PetalComponent{(int)cfg.get_long("function.which", 1)};
  }
  throw std::runtime_error("unknown function.variant: " + v);
}

std::vector<double> radii_from_config(const Config& cfg) {
  std::vector<double> r = cfg.get_doubles("radii.list");
  if (!r.empty()) return r;
  double start = cfg.get_double("radii.start", 50000.0);
  double mult = cfg.get_double("radii.multiplier", 2.0);
  long count = cfg.get_long("radii.count", 3);
  for (long i = 0; i < count; ++i) {
    r.push_back(start);
    start *= mult;
  }
  return r;
}

std::vector<std::pair<double, double>> annuli_from_config(const Config& cfg) {
  // annuli.list = "lo:hi, lo:hi, ..."
  std::vector<std::pair<double, double>> out;
  std::string s = cfg.get_string("annuli.list", "20:45, 45:200");
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t c = tok.find(':');
    if (c == std::string::npos) throw std::runtime_error("annuli.list: expected lo:hi");
    out.emplace_back(std::stod(tok.substr(0, c)), std::stod(tok.substr(c + 1)));
  }
  return out;
}

}  // namespace juliadir
