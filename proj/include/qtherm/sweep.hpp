#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtherm/parallel.hpp"
#include "qtherm/report.hpp"
#include "qtherm/spinmodels.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

/// Invalid user configuration (bad range, unknown measure, unwritable path).
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode {
  grid_b1b2,       // B1 x B2 at fixed K, T
  line_b1eqnegb2,  // B1 with B2 = -B1
  grid_kt,         // K x T at fixed B1, B2
  grid_b2t,        // B2 x T at fixed K, B1
  bounds_scan,     // B1 at fixed B2: chen_lb, alb, ub
  densecode_scan,  // K at fixed B1, B2, T: negativity, cdc, udc
  threshold,       // T_s and T* along one parameter axis
  spectrum,        // closed-form vs numerical spectrum along one axis
};

enum class Axis { B1, B2, K, T };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view s);
std::string_view axis_name(Axis a);
std::optional<Axis> parse_axis(std::string_view s);

/// `count` evenly spaced values from start to stop inclusive.
struct AxisRange {
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  Vector values() const;
};

/// Parses "start:stop:count"; throws config_error.
AxisRange parse_range(std::string_view s);

/// B1, B2 in [-6, 6]; K in [-2, 0]; T in [0.01, 2]; 101 points each.
AxisRange default_range(Axis a);

struct SweepConfig {
  Mode mode = Mode::grid_b1b2;
  QutritChainParams params{-1.0, -1.7, 1.3, -1.3};
  double temperature = 1.0;
  std::map<Axis, AxisRange> ranges;
  /// Empty selects the mode's default columns.
  std::vector<Measure> measures;
  /// Swept parameter for the threshold and spectrum modes.
  Axis scan_axis = Axis::K;
  /// Also emit the ALB-based threshold estimate in threshold mode.
  bool threshold_alb = false;
  ThresholdScan ts_scan;
  /// Empty writes to stdout.
  std::string out;
  int threads = 0;

  AxisRange range(Axis a) const;
  /// Throws config_error on an inconsistent configuration.
  void validate() const;
};

std::vector<Axis> mode_axes(const SweepConfig& cfg);
std::vector<Measure> effective_measures(const SweepConfig& cfg);

/// Rows are in lexicographic axis order (first axis outermost). An empty
/// optional is written as an empty CSV field.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t column(std::string_view name) const;
};

/// Grid and line modes: axis values followed by the requested measures.
Table run_sweep(const SweepConfig& cfg, Execution exec = Execution::parallel);

/// Per axis point: T_s from negativity (and ALB when requested), then T*.
Table run_threshold(const SweepConfig& cfg, Execution exec = Execution::parallel);

/// Per axis point: E1..E9 (E4..E6 from the central block) and the largest
/// deviation between that set and the numerical spectrum.
Table run_spectrum(const SweepConfig& cfg, Execution exec = Execution::parallel);

/// Dispatches on cfg.mode.
Table run(const SweepConfig& cfg, Execution exec = Execution::parallel);

/// Residual column bound enforced by run_spectrum callers.
inline constexpr double kSpectrumResidualLimit = 1e-9;

std::string format_value(double x);
void write_csv(const Table& t, std::ostream& os);

using KeyValues = std::map<std::string, std::string>;

/// key=value per line; '#' starts a comment; blank lines ignored.
KeyValues parse_key_values(std::istream& is);

/// Keys: mode, J, K, B1, B2, T, range-B1, range-B2, range-K, range-T,
/// measures, axis, alb, ts-tmax, ts-grid, out, threads.
SweepConfig config_from_key_values(const KeyValues& kv, Mode default_mode);

}  // namespace qtherm
