#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qtherm/entanglement.hpp"
#include "qtherm/report.hpp"
#include "qtherm/sweep.hpp"

namespace qtherm::cli {

namespace {

// Flag values stay as text so that a config file and the command line go
// through the same parser; flags given on the command line win.
struct FlagSet {
  std::map<std::string, std::string> values;
  std::string config_path;

  void add_value(CLI::App& app, const std::string& key, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + key, [this, key](const std::string& v) { values[key] = v; }, help);
  }
};

void add_model_flags(CLI::App& app, FlagSet& flags) {
  flags.add_value(app, "J", "bilinear coupling (default -1)");
  flags.add_value(app, "K", "biquadratic coupling (default -1.7)");
  flags.add_value(app, "B1", "field on site 1 (default 1.3)");
  flags.add_value(app, "B2", "field on site 2 (default -1.3)");
  flags.add_value(app, "T", "temperature (default 1)");
  app.add_option("--config", flags.config_path, "key=value file; command-line flags take precedence");
}

void add_sweep_flags(CLI::App& app, FlagSet& flags, bool with_mode) {
  if (with_mode) flags.add_value(app, "mode", "grid-b1b2 | line-b1eqnegb2 | grid-kt | grid-b2t | bounds-scan | densecode-scan | threshold | spectrum");
  for (const char* axis : {"B1", "B2", "K", "T"})
    flags.add_value(app, std::string("range-") + axis, "start:stop:count");
  flags.add_value(app, "out", "output CSV path (default stdout)");
  flags.add_value(app, "threads", "worker threads (default: all cores)");
}

KeyValues merged_values(const FlagSet& flags) {
  KeyValues kv;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw config_error("cannot read config file '" + flags.config_path + "'");
    kv = parse_key_values(in);
  }
  for (const auto& [k, v] : flags.values) kv[k] = v;
  return kv;
}

// Returns kExitNumerical after reporting, or kExitOk.
int check_table(const SweepConfig& cfg, const Table& t, std::ostream& err) {
  if (cfg.mode == Mode::spectrum) {
    const std::size_t col = t.column("residual");
    for (const auto& row : t.rows)
      if (!(*row[col] < kSpectrumResidualLimit)) {
        err << "error: closed-form spectrum residual " << format_value(*row[col])
            << " exceeds " << kSpectrumResidualLimit << '\n';
        return kExitNumerical;
      }
  }
  if (cfg.mode == Mode::threshold) {
    const std::size_t star = t.column("tstar");
    std::vector<std::size_t> ts_cols{t.column("ts_negativity")};
    if (cfg.threshold_alb) ts_cols.push_back(t.column("ts_alb"));
    for (const auto& row : t.rows)
      for (std::size_t c : ts_cols) {
        if (!row[c]) continue;
        if (!row[star] || *row[c] > *row[star]) {
          err << "error: threshold estimate " << format_value(*row[c])
              << " lies above the separable-ball temperature at " << t.header[0] << "="
              << format_value(*row[0]) << '\n';
          return kExitNumerical;
        }
      }
  }
  return kExitOk;
}

int emit(const SweepConfig& cfg, const Table& t, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  write_csv(t, csv);
  if (cfg.out.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << csv.str()) || !file.flush())
      throw config_error("cannot write output file '" + cfg.out + "'");
  }
  return check_table(cfg, t, err);
}

int run_table(const FlagSet& flags, Mode default_mode, std::optional<Mode> forced,
              std::ostream& out, std::ostream& err) {
  SweepConfig cfg = config_from_key_values(merged_values(flags), default_mode);
  if (forced && cfg.mode != *forced)
    throw config_error("mode '" + std::string(mode_name(cfg.mode)) + "' does not fit this subcommand");
  set_thread_count(cfg.threads);
  return emit(cfg, run(cfg), out, err);
}

int run_report(const FlagSet& flags, std::ostream& out) {
  const SweepConfig cfg = config_from_key_values(merged_values(flags), Mode::grid_b1b2);
  if (!(cfg.temperature > 0.0)) throw config_error("temperature must be positive");
  const BoundReport r = thermal_report(cfg.params, cfg.temperature);
  for (Measure m : kAllMeasures) {
    const double v = field(r, m);
    if (!std::isfinite(v)) throw consistency_error("non-finite " + std::string(measure_name(m)));
    out << measure_name(m) << '=' << format_value(v) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal entanglement sweeps for a two-qutrit bilinear-biquadratic chain",
               "qtherm-sweep"};
  app.require_subcommand(1);

  FlagSet sweep_flags, threshold_flags, spectrum_flags, report_flags;

  auto* sweep = app.add_subcommand("sweep", "grid and line sweeps of BoundReport measures");
  add_model_flags(*sweep, sweep_flags);
  add_sweep_flags(*sweep, sweep_flags, true);
  sweep_flags.add_value(*sweep, "measures", "comma list of BoundReport fields");

  auto* threshold = app.add_subcommand("threshold", "T_s estimate and T* along one axis");
  add_model_flags(*threshold, threshold_flags);
  add_sweep_flags(*threshold, threshold_flags, false);
  threshold_flags.add_value(*threshold, "axis", "swept parameter: K, B1 or B2 (default K)");
  threshold_flags.add_value(*threshold, "alb", "also estimate T_s from the algebraic lower bound (true/false)");
  threshold_flags.add_value(*threshold, "ts-tmax", "upper end of the temperature scan (default 10)");
  threshold_flags.add_value(*threshold, "ts-grid", "temperature scan points (default 400)");

  auto* spectrum = app.add_subcommand("spectrum", "closed-form vs numerical energies along one axis");
  add_model_flags(*spectrum, spectrum_flags);
  add_sweep_flags(*spectrum, spectrum_flags, false);
  spectrum_flags.add_value(*spectrum, "axis", "swept parameter: K, B1 or B2 (default K)");

  auto* report = app.add_subcommand("report", "all measures at one point as key=value lines");
  add_model_flags(*report, report_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*sweep) return run_table(sweep_flags, Mode::grid_b1b2, std::nullopt, out, err);
    if (*threshold) {
      threshold_flags.values["mode"] = "threshold";
      return run_table(threshold_flags, Mode::threshold, Mode::threshold, out, err);
    }
    if (*spectrum) {
      spectrum_flags.values["mode"] = "spectrum";
      return run_table(spectrum_flags, Mode::spectrum, Mode::spectrum, out, err);
    }
    return run_report(report_flags, out);
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const degenerate_parameters_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const consistency_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace qtherm::cli
