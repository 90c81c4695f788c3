#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fvk/harness/config.hpp"
#include "fvk/harness/csvio.hpp"

namespace fvk::harness {

// Column schema for an experiment.  Frozen; documented in --help and in the
// README so downstream parsing can rely on it.
std::vector<std::string> sweep_columns(const std::string& experiment);

// Run every parameter tuple of the sweep.  Each row is computed independently
// (worker pool of config.threads) and handed to on_row in declaration order,
// so output files can be written incrementally.  A failure inside one point
// fills that row's error column and the sweep continues.  Returns the number
// of rows with a nonempty error cell.
int run_sweep(const SweepConfig& config,
              const std::function<void(const std::vector<std::string>&)>& on_row);

// Convenience wrapper collecting rows into a table.
Table run_sweep_table(const SweepConfig& config);

// Sidecar metadata written next to the CSV: config hash, code version, grid
// resolutions, row count.  Deterministic bytes.
std::string sweep_metadata_json(const SweepConfig& config, int rows, int failures);

// Executes the sweep and writes <output_path> plus <output_path>.meta.json.
// Returns the failure count.
int run_sweep_to_files(const SweepConfig& config);

extern const char* kVersion;

}  // namespace fvk::harness
