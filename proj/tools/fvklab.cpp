#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fvk/circle.hpp"
#include "fvk/errors.hpp"
#include "fvk/harness/config.hpp"
#include "fvk/harness/report.hpp"
#include "fvk/harness/sweep.hpp"

namespace {

using fvk::harness::format_double;

std::string columns_help(const std::string& experiment) {
  std::string s = "Output columns: ";
  bool first = true;
  for (const auto& c : fvk::harness::sweep_columns(experiment)) {
    if (!first) s += ", ";
    s += c;
    first = false;
  }
  return s + ".";
}

struct SweepFlags {
  std::string config_path;
  std::string out;
  unsigned long long seed = 0;
  int threads = 0;
  int grid_n = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--config", config_path, "sweep config file (key = value lines)");
    sub->add_option("--out", out, "override the output CSV path");
    sub->add_option("--seed", seed, "override the base seed");
    sub->add_option("--threads", threads, "override the worker count");
    sub->add_option("--grid-n", grid_n, "override the grid resolution");
  }

  fvk::harness::SweepConfig load(const CLI::App* sub, const std::string& name) const {
    if (config_path.empty())
      throw fvk::ConfigError(name + ": --config is required");
    fvk::harness::SweepConfig cfg = fvk::harness::load_config(config_path);
    if (cfg.experiment.empty()) cfg.experiment = name;
    if (cfg.experiment != name)
      throw fvk::ConfigError("config declares experiment '" + cfg.experiment +
                             "' but the subcommand is '" + name + "'");
    if (sub->count("--out")) cfg.output_path = out;
    if (sub->count("--seed")) cfg.seed = seed;
    if (sub->count("--threads")) cfg.threads = threads;
    if (sub->count("--grid-n")) cfg.grid_n = grid_n;
    cfg.validate();
    return cfg;
  }
};

int run_sweep_command(const CLI::App* sub, const SweepFlags& flags, const std::string& name) {
  const fvk::harness::SweepConfig cfg = flags.load(sub, name);
  const int failures = fvk::harness::run_sweep_to_files(cfg);
  std::cout << name << ": wrote " << cfg.output_path << " and " << cfg.output_path
            << ".meta.json";
  if (failures > 0)
    std::cout << " (" << failures << " failed points, see the error column)";
  std::cout << "\n";
  return failures > 0 ? 2 : 0;
}

int run_circle_single(double Delta, int N, double tol, unsigned long long seed,
                      const std::string& out) {
  fvk::optim::OptimSettings settings;
  settings.seed = seed;
  const fvk::circle::CircleSolution sol = fvk::circle::solve_min(Delta, N, tol, settings);
  const double predicted = 6.0 * std::numbers::pi * Delta * Delta;

  std::cout << "ring profile minimum, Delta = " << format_double(Delta) << ", order " << N
            << "\n";
  std::cout << "  energy              " << format_double(sol.energy) << "\n";
  std::cout << "  predicted minimum   " << format_double(predicted) << "  (6 pi Delta^2)\n";
  std::cout << "  relative gap        "
            << format_double(sol.energy / predicted - 1.0) << "\n";
  std::cout << "  multiplier          " << format_double(sol.multiplier) << "\n";
  std::cout << "  constraint residual " << format_double(sol.constraint_residual) << "\n";
  std::cout << "  mass outside {1,2}  "
            << format_double(fvk::circle::mass_outside_12(sol.curve)) << "\n";

  if (!out.empty()) {
    nlohmann::ordered_json j;
    j["Delta"] = Delta;
    j["N"] = N;
    j["energy"] = sol.energy;
    j["predicted"] = predicted;
    j["multiplier"] = sol.multiplier;
    j["constraint_residual"] = sol.constraint_residual;
    j["outer_iterations"] = sol.outer_iterations;
    std::vector<double> masses;
    for (int n = 0; n <= sol.curve.order(); ++n) masses.push_back(sol.curve.mode_mass(n));
    j["mode_mass"] = masses;
    fvk::harness::write_text_file(out, j.dump(2) + "\n");
    std::cout << "  wrote " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fvklab: energy experiments for thin sheet indentation.\n"
      "Sweep subcommands read a config file (see configs/ for examples) and write\n"
      "a CSV plus a .meta.json sidecar with the config hash.  Outputs are\n"
      "deterministic for a fixed config, independent of --threads."};
  app.require_subcommand(1);

  auto* circle_cmd = app.add_subcommand(
      "circle",
      "Minimise the ring bending functional at fixed excess length.\n"
      "Single run with --Delta, or a sweep with --config.\n" +
          columns_help("circle"));
  double Delta = 1.0;
  int order = 8;
  double tol = 1e-6;
  SweepFlags circle_flags;
  circle_cmd->add_option("--Delta", Delta, "cone deficit amplitude (single run)");
  circle_cmd->add_option("-N,--order", order, "trigonometric order")->capture_default_str();
  circle_cmd->add_option("--tol", tol, "verification tolerance")->capture_default_str();
  circle_flags.attach(circle_cmd);

  auto* econe_cmd = app.add_subcommand(
      "econe-upper",
      "Plate energy of the truncated cone construction over (h, Delta).\n" +
          columns_help("econe-upper"));
  SweepFlags econe_flags;
  econe_flags.attach(econe_cmd);

  auto* construct_cmd = app.add_subcommand(
      "cap-construct",
      "Energy and diagnostics of the inversion construction over (h, delta).\n" +
          columns_help("cap-construct"));
  SweepFlags construct_flags;
  construct_flags.attach(construct_cmd);

  auto* min_cmd = app.add_subcommand(
      "cap-min",
      "Descend the radial cap energy from the inversion construction.\n" +
          columns_help("cap-min"));
  SweepFlags min_flags;
  min_flags.attach(min_cmd);

  auto* diag_cmd = app.add_subcommand(
      "cap-diagnostics",
      "Lower bound ratios for the minimised cap profile.\n" +
          columns_help("cap-diagnostics"));
  SweepFlags diag_flags;
  diag_flags.attach(diag_cmd);

  auto* fit_cmd = app.add_subcommand(
      "fit",
      "Fit a scaling model to a results table.  Models: A*h^p, A*delta^q,\n"
      "A*h^p*delta^q, C1*h^2*log(1/h)+C2*h^2.");
  std::string fit_config_path, fit_input, fit_model, fit_column, fit_out;
  double fit_filter_delta = -1.0, fit_filter_Delta = -1.0;
  fit_cmd->add_option("--config", fit_config_path, "fit config file");
  fit_cmd->add_option("--input", fit_input, "results CSV");
  fit_cmd->add_option("--model", fit_model, "model name");
  fit_cmd->add_option("--column", fit_column, "value column (default total)");
  fit_cmd->add_option("--filter-delta", fit_filter_delta, "keep rows with this delta");
  fit_cmd->add_option("--filter-Delta", fit_filter_Delta, "keep rows with this Delta");
  fit_cmd->add_option("--out", fit_out, "output JSON path (default fit.json)");

  auto* report_cmd = app.add_subcommand(
      "report", "Combine a results table and fit records into a summary.");
  std::string report_results, report_json = "report.json", report_text = "report.txt";
  std::vector<std::string> report_fits;
  report_cmd->add_option("--results", report_results, "results CSV")->required();
  report_cmd->add_option("--fit", report_fits, "fit JSON file (repeatable)");
  report_cmd->add_option("--out-json", report_json, "")->capture_default_str();
  report_cmd->add_option("--out-text", report_text, "")->capture_default_str();

  // exit codes: 0 success, 1 bad invocation or config, 2 numeric/runtime failure
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (circle_cmd->parsed()) {
      if (circle_cmd->count("--config")) {
        return run_sweep_command(circle_cmd, circle_flags, "circle");
      }
      if (!circle_cmd->count("--Delta"))
        throw fvk::ConfigError("circle: pass --Delta for a single run or --config for a sweep");
      const unsigned long long seed = circle_cmd->count("--seed") ? circle_flags.seed : 1;
      return run_circle_single(Delta, order, tol, seed, circle_flags.out);
    }
    if (econe_cmd->parsed()) return run_sweep_command(econe_cmd, econe_flags, "econe-upper");
    if (construct_cmd->parsed())
      return run_sweep_command(construct_cmd, construct_flags, "cap-construct");
    if (min_cmd->parsed()) return run_sweep_command(min_cmd, min_flags, "cap-min");
    if (diag_cmd->parsed()) return run_sweep_command(diag_cmd, diag_flags, "cap-diagnostics");

    if (fit_cmd->parsed()) {
      fvk::harness::FitConfig cfg;
      if (!fit_config_path.empty()) cfg = fvk::harness::load_fit_config(fit_config_path);
      if (fit_cmd->count("--input")) cfg.input = fit_input;
      if (fit_cmd->count("--model")) cfg.model = fit_model;
      if (fit_cmd->count("--column")) cfg.value_column = fit_column;
      if (fit_cmd->count("--filter-delta")) cfg.filter_delta = fit_filter_delta;
      if (fit_cmd->count("--filter-Delta")) cfg.filter_Delta = fit_filter_Delta;
      if (fit_cmd->count("--out")) cfg.output_path = fit_out;
      if (cfg.input.empty() || cfg.model.empty())
        throw fvk::ConfigError("fit: need --input and --model (or a --config providing them)");
      const fvk::harness::FitRecord record = fvk::harness::run_fit(cfg);
      fvk::harness::write_text_file(cfg.output_path,
                                    fvk::harness::fit_record_json(record));
      std::cout << "fit " << record.fit.model << " on " << record.value_column << ": A="
                << format_double(record.fit.A) << " p=" << format_double(record.fit.p)
                << " q=" << format_double(record.fit.q)
                << " max_rel_residual=" << format_double(record.fit.max_rel_residual)
                << " -> " << cfg.output_path << "\n";
      return 0;
    }

    if (report_cmd->parsed()) {
      const fvk::harness::Table results = fvk::harness::read_csv(report_results);
      std::vector<fvk::harness::FitRecord> fits;
      for (const auto& path : report_fits)
        for (auto& r : fvk::harness::read_fit_records(path)) fits.push_back(std::move(r));
      const fvk::harness::ReportFiles files = fvk::harness::build_report(results, fits);
      fvk::harness::write_text_file(report_json, files.json);
      fvk::harness::write_text_file(report_text, files.text);
      std::cout << files.text;
      std::cout << "wrote " << report_json << " and " << report_text << "\n";
      return 0;
    }
  } catch (const fvk::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
