#include "fvk/harness/report.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "fvk/errors.hpp"
#include "fvk/harness/sweep.hpp"

namespace fvk::harness {

namespace {

using json = nlohmann::ordered_json;

double cell_to_double(const std::string& cell, const std::string& context) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0')
    throw IoError(context + ": '" + cell + "' is not a number");
  return v;
}

bool matches(double value, double filter) {
  return std::abs(value - filter) <= 1e-12 * std::max(1.0, std::abs(filter));
}

// unique value of a column across rows, or fallback when absent or mixed
double unique_or(const Table& t, int col, const std::vector<size_t>& rows, double fallback) {
  if (col < 0 || rows.empty()) return fallback;
  const double first = cell_to_double(t.rows[rows[0]][col], t.columns[col]);
  for (size_t k : rows)
    if (!matches(cell_to_double(t.rows[k][col], t.columns[col]), first)) return fallback;
  return first;
}

std::string experiment_from_meta(const std::string& csv_path) {
  try {
    const json j = json::parse(read_text_file(csv_path + ".meta.json"));
    return j.value("experiment", "");
  } catch (const std::exception&) {
    return "";  // sidecar is optional
  }
}

json record_to_json(const FitRecord& r) {
  json j;
  j["model"] = r.fit.model;
  j["A"] = r.fit.A;
  j["p"] = r.fit.p;
  j["q"] = r.fit.q;
  j["max_rel_residual"] = r.fit.max_rel_residual;
  j["experiment"] = r.experiment;
  j["value_column"] = r.value_column;
  j["Delta"] = r.Delta;
  j["delta"] = r.delta;
  return j;
}

FitRecord record_from_json(const json& j) {
  FitRecord r;
  r.fit.model = j.value("model", "");
  r.fit.A = j.value("A", 0.0);
  r.fit.p = j.value("p", 0.0);
  r.fit.q = j.value("q", 0.0);
  r.fit.max_rel_residual = j.value("max_rel_residual", 0.0);
  r.experiment = j.value("experiment", "");
  r.value_column = j.value("value_column", "");
  r.Delta = j.value("Delta", 0.0);
  r.delta = j.value("delta", -1.0);
  return r;
}

void describe_fit(std::ostringstream& text, const FitRecord& r) {
  text << "model " << r.fit.model;
  if (!r.experiment.empty()) text << "  [" << r.experiment << "]";
  text << "\n";

  if (r.fit.model == "C1*h^2*log(1/h)+C2*h^2") {
    text << "  log coefficient C1: observed " << format_double(r.fit.A);
    if (r.Delta > 0.0) {
      const double predicted = 6.0 * std::numbers::pi * r.Delta * r.Delta;
      text << ", predicted " << format_double(predicted) << " (ring minimum at Delta = "
           << format_double(r.Delta) << "), ratio "
           << format_double(r.fit.A / predicted) << "\n";
    } else {
      text << " (no Delta recorded, nothing to compare against)\n";
    }
    text << "  subleading C2: " << format_double(r.fit.p) << "\n";
  } else if (r.fit.model == "A*h^p" || r.fit.model == "A*h^p*delta^q") {
    text << "  h exponent p: observed " << format_double(r.fit.p);
    if (r.delta == 0.0)
      text << ", predicted 2 (pure bending at zero depth)";
    else if (r.delta > 0.0 || r.fit.model == "A*h^p*delta^q")
      text << ", predicted 1.5";
    text << "\n";
    if (r.fit.model == "A*h^p*delta^q")
      text << "  delta exponent q: observed " << format_double(r.fit.q)
           << ", predicted 1.5\n";
  } else if (r.fit.model == "A*delta^q") {
    text << "  delta exponent q: observed " << format_double(r.fit.q)
         << ", predicted 1.5\n";
  }
  text << "  prefactor: " << format_double(r.fit.A) << "\n";
  text << "  max rel residual: " << format_double(r.fit.max_rel_residual) << "\n";
}

}  // namespace

FitRecord run_fit(const FitConfig& config) {
  const Table t = read_csv(config.input);
  const int vcol = t.column_index(config.value_column);
  if (vcol < 0)
    throw FitError("fit: column '" + config.value_column + "' not found in " + config.input);
  const int hcol = t.column_index("h");
  const int dcol = t.column_index("delta");
  const int Dcol = t.column_index("Delta");
  const int ecol = t.column_index("error");
  if (config.filter_delta >= 0.0 && dcol < 0)
    throw ConfigError("fit: filter_delta set but the table has no delta column");
  if (config.filter_Delta >= 0.0 && Dcol < 0)
    throw ConfigError("fit: filter_Delta set but the table has no Delta column");

  std::vector<size_t> kept;
  std::vector<fitting::Sample> samples;
  for (size_t k = 0; k < t.rows.size(); ++k) {
    const auto& row = t.rows[k];
    if (ecol >= 0 && !row[ecol].empty()) continue;  // failed points carry no value
    if (config.filter_delta >= 0.0 &&
        !matches(cell_to_double(row[dcol], "delta"), config.filter_delta))
      continue;
    if (config.filter_Delta >= 0.0 &&
        !matches(cell_to_double(row[Dcol], "Delta"), config.filter_Delta))
      continue;
    fitting::Sample s;
    if (hcol >= 0) s.h = cell_to_double(row[hcol], "h");
    if (dcol >= 0) s.delta = cell_to_double(row[dcol], "delta");
    s.value = cell_to_double(row[vcol], config.value_column);
    samples.push_back(s);
    kept.push_back(k);
  }
  if (samples.empty()) throw FitError("fit: no usable rows after filtering");

  FitRecord record;
  record.fit = fitting::fit_scaling(samples, config.model);
  record.experiment = experiment_from_meta(config.input);
  record.value_column = config.value_column;
  record.Delta = config.filter_Delta >= 0.0 ? config.filter_Delta : unique_or(t, Dcol, kept, 0.0);
  record.delta = config.filter_delta >= 0.0 ? config.filter_delta : unique_or(t, dcol, kept, -1.0);
  return record;
}

std::string fit_record_json(const FitRecord& record) {
  return record_to_json(record).dump(2) + "\n";
}

std::vector<FitRecord> read_fit_records(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  std::vector<FitRecord> out;
  if (j.is_array())
    for (const auto& item : j) out.push_back(record_from_json(item));
  else
    out.push_back(record_from_json(j));
  return out;
}

ReportFiles build_report(const Table& results, const std::vector<FitRecord>& fits) {
  json j;
  j["version"] = kVersion;
  j["rows"] = results.rows.size();
  j["fits"] = json::array();
  for (const auto& f : fits) j["fits"].push_back(record_to_json(f));

  std::ostringstream text;
  text << "scaling report (version " << kVersion << ")\n";
  text << "rows: " << results.rows.size() << "\n";
  const int ecol = results.column_index("error");
  if (ecol >= 0) {
    int failures = 0;
    for (const auto& row : results.rows)
      if (!row[ecol].empty()) ++failures;
    text << "failed rows: " << failures << "\n";
    j["failed_rows"] = failures;
  }
  text << "\n";
  for (const auto& f : fits) describe_fit(text, f);

  ReportFiles files;
  files.json = j.dump(2) + "\n";
  files.text = text.str();
  return files;
}

}  // namespace fvk::harness
