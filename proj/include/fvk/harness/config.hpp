#pragma once

#include <map>
#include <string>
#include <vector>

#include "fvk/optim.hpp"

namespace fvk::harness {

// Parsed sweep description.  One experiment per config; the parameter lists
// are crossed in declaration order (h outer, then delta, then Delta).
struct SweepConfig {
  std::string experiment;  // circle | econe-upper | cap-construct | cap-min | cap-diagnostics
  std::vector<double> h_values;
  std::vector<double> delta_values;
  std::vector<double> Delta_values;
  int grid_n = 2048;    // radial nodes (cap experiments), angular nodes (econe)
  int fourier_N = 8;
  double tol = 1e-6;    // verification tolerance for the circle solver
  unsigned long long seed = 1;
  int threads = 1;
  std::string output_path = "results.csv";
  optim::OptimSettings optim;

  void validate() const;
};

// Key = value text format, one pair per line, '#' starts a comment.  Lists
// are comma separated.  Unknown keys are errors, as are duplicates and values
// that fail to parse.  See configs/ for annotated examples.
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config(const std::string& path);

// Canonical serialisation used for the reproducibility hash in the sidecar.
std::string canonical_config_text(const SweepConfig& config);
unsigned long long config_hash(const SweepConfig& config);

// Fit driver description (subcommand `fit`): which table, which model, which
// column, optional row filters.
struct FitConfig {
  std::string input;
  std::string model;
  std::string value_column = "total";
  double filter_delta = -1.0;   // negative = no filter
  double filter_Delta = -1.0;
  std::string output_path = "fit.json";
};
FitConfig parse_fit_config_text(const std::string& text);
FitConfig load_fit_config(const std::string& path);

}  // namespace fvk::harness
