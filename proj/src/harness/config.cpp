#include "fvk/harness/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "fvk/errors.hpp"
#include "fvk/harness/csvio.hpp"

namespace fvk::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Pair {
  std::string key;
  std::string value;
  int line;
};

std::vector<Pair> parse_pairs(const std::string& text) {
  std::vector<Pair> pairs;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    if (!seen.insert(key).second)
      throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    pairs.push_back({key, value, lineno});
  }
  return pairs;
}

double parse_double(const Pair& p) {
  char* end = nullptr;
  const double v = std::strtod(p.value.c_str(), &end);
  if (end == p.value.c_str() || *end != '\0')
    throw ConfigError("config line " + std::to_string(p.line) + ": '" + p.value +
                      "' is not a number");
  return v;
}

long long parse_int(const Pair& p) {
  char* end = nullptr;
  const long long v = std::strtoll(p.value.c_str(), &end, 10);
  if (end == p.value.c_str() || *end != '\0')
    throw ConfigError("config line " + std::to_string(p.line) + ": '" + p.value +
                      "' is not an integer");
  return v;
}

std::vector<double> parse_list(const Pair& p) {
  std::vector<double> out;
  std::istringstream in(p.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("config line " + std::to_string(p.line) + ": empty list entry");
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      throw ConfigError("config line " + std::to_string(p.line) + ": '" + item +
                        "' is not a number");
    out.push_back(v);
  }
  return out;
}

const std::set<std::string> kExperiments = {"circle", "econe-upper", "cap-construct",
                                            "cap-min", "cap-diagnostics"};

std::string join(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace

void SweepConfig::validate() const {
  if (!kExperiments.count(experiment))
    throw ConfigError("unknown experiment '" + experiment + "'");
  const bool needs_h = experiment != "circle";
  const bool needs_delta =
      experiment == "cap-construct" || experiment == "cap-min" || experiment == "cap-diagnostics";
  const bool needs_Delta = experiment == "circle" || experiment == "econe-upper";
  if (needs_h && h_values.empty()) throw ConfigError(experiment + ": no h values");
  if (needs_delta && delta_values.empty()) throw ConfigError(experiment + ": no delta values");
  if (needs_Delta && Delta_values.empty()) throw ConfigError(experiment + ": no Delta values");
  for (double h : h_values)
    if (!(h > 0.0) || !(h <= 0.5)) throw ConfigError("h values must lie in (0, 1/2]");
  for (double d : delta_values)
    if (!(d >= 0.0) || !(d <= 1.0)) throw ConfigError("delta values must lie in [0, 1]");
  for (double D : Delta_values)
    if (!(D > 0.0)) throw ConfigError("Delta values must be positive");
  if (grid_n < 8) throw ConfigError("grid_n must be at least 8");
  if (fourier_N < 4) throw ConfigError("fourier_N must be at least 4");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (threads < 1 || threads > 256) throw ConfigError("threads must lie in [1, 256]");
  if (output_path.empty()) throw ConfigError("output path must not be empty");
  optim.validate();
}

SweepConfig parse_config_text(const std::string& text) {
  SweepConfig cfg;
  for (const auto& p : parse_pairs(text)) {
    if (p.key == "experiment") cfg.experiment = p.value;
    else if (p.key == "h") cfg.h_values = parse_list(p);
    else if (p.key == "delta") cfg.delta_values = parse_list(p);
    else if (p.key == "Delta") cfg.Delta_values = parse_list(p);
    else if (p.key == "grid_n") cfg.grid_n = static_cast<int>(parse_int(p));
    else if (p.key == "fourier_N") cfg.fourier_N = static_cast<int>(parse_int(p));
    else if (p.key == "tol") cfg.tol = parse_double(p);
    else if (p.key == "seed") cfg.seed = static_cast<unsigned long long>(parse_int(p));
    else if (p.key == "threads") cfg.threads = static_cast<int>(parse_int(p));
    else if (p.key == "output") cfg.output_path = p.value;
    else if (p.key == "optim_max_inner") cfg.optim.max_inner = static_cast<int>(parse_int(p));
    else if (p.key == "optim_max_outer") cfg.optim.max_outer = static_cast<int>(parse_int(p));
    else if (p.key == "optim_grad_tol") cfg.optim.grad_tol = parse_double(p);
    else
      throw ConfigError("config line " + std::to_string(p.line) + ": unknown key '" + p.key + "'");
  }
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  SweepConfig cfg = parse_config_text(read_text_file(path));
  return cfg;
}

// Execution details (threads, output path) are deliberately excluded: the
// hash identifies the computed quantities, which they do not affect.
std::string canonical_config_text(const SweepConfig& config) {
  std::ostringstream out;
  out << "experiment = " << config.experiment << '\n'
      << "h = " << join(config.h_values) << '\n'
      << "delta = " << join(config.delta_values) << '\n'
      << "Delta = " << join(config.Delta_values) << '\n'
      << "grid_n = " << config.grid_n << '\n'
      << "fourier_N = " << config.fourier_N << '\n'
      << "tol = " << format_double(config.tol) << '\n'
      << "seed = " << config.seed << '\n'
      << "optim_max_inner = " << config.optim.max_inner << '\n'
      << "optim_max_outer = " << config.optim.max_outer << '\n'
      << "optim_grad_tol = " << format_double(config.optim.grad_tol) << '\n';
  return out.str();
}

unsigned long long config_hash(const SweepConfig& config) {
  // FNV-1a over the canonical text
  unsigned long long hash = 14695981039346656037ull;
  for (unsigned char c : canonical_config_text(config)) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

FitConfig parse_fit_config_text(const std::string& text) {
  FitConfig cfg;
  for (const auto& p : parse_pairs(text)) {
    if (p.key == "input") cfg.input = p.value;
    else if (p.key == "model") cfg.model = p.value;
    else if (p.key == "value_column") cfg.value_column = p.value;
    else if (p.key == "filter_delta") cfg.filter_delta = parse_double(p);
    else if (p.key == "filter_Delta") cfg.filter_Delta = parse_double(p);
    else if (p.key == "output") cfg.output_path = p.value;
    else
      throw ConfigError("config line " + std::to_string(p.line) + ": unknown key '" + p.key + "'");
  }
  if (cfg.input.empty()) throw ConfigError("fit config: missing input");
  if (cfg.model.empty()) throw ConfigError("fit config: missing model");
  return cfg;
}

FitConfig load_fit_config(const std::string& path) {
  return parse_fit_config_text(read_text_file(path));
}

}  // namespace fvk::harness
