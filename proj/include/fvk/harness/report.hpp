#pragma once

#include <string>
#include <vector>

#include "fvk/fitting.hpp"
#include "fvk/harness/config.hpp"
#include "fvk/harness/csvio.hpp"

namespace fvk::harness {

// A fit together with the context needed to compare it against the value the
// theory predicts for that experiment.
struct FitRecord {
  fitting::ScalingFit fit;
  std::string experiment;
  std::string value_column;
  double Delta = 0.0;   // 0 = not applicable
  double delta = -1.0;  // negative = not filtered
};

// Run the fit described by the config against a results table.
FitRecord run_fit(const FitConfig& config);
std::string fit_record_json(const FitRecord& record);
std::vector<FitRecord> read_fit_records(const std::string& path);

// Machine readable summary (json) plus a plain text digest.  For each fit the
// text names the quantity tested, the predicted value where one exists (for
// example the log coefficient 6*pi*Delta^2, or the h exponents 3/2 and 2) and
// the observed/predicted ratio.  Byte identical across reruns on the same
// inputs.
struct ReportFiles {
  std::string json;
  std::string text;
};
ReportFiles build_report(const Table& results, const std::vector<FitRecord>& fits);

}  // namespace fvk::harness
