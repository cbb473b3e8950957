#include "qtherm/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qtherm/entanglement.hpp"

namespace qtherm {

namespace {

constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::grid_b1b2, "grid-b1b2"},           {Mode::line_b1eqnegb2, "line-b1eqnegb2"},
    {Mode::grid_kt, "grid-kt"},               {Mode::grid_b2t, "grid-b2t"},
    {Mode::bounds_scan, "bounds-scan"},       {Mode::densecode_scan, "densecode-scan"},
    {Mode::threshold, "threshold"},           {Mode::spectrum, "spectrum"},
};

constexpr std::pair<Axis, std::string_view> kAxisNames[] = {
    {Axis::B1, "B1"}, {Axis::B2, "B2"}, {Axis::K, "K"}, {Axis::T, "T"}};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw config_error("invalid number for " + std::string(key) + ": '" + s + "'");
  return v;
}

long parse_long(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw config_error("invalid integer for " + std::string(key) + ": '" + s + "'");
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw config_error("invalid boolean for " + std::string(key) + ": '" + s + "'");
}

struct Point {
  QutritChainParams params;
  double temperature;
};

void apply_axis(Point& pt, Mode mode, Axis axis, double value) {
  switch (axis) {
    case Axis::B1:
      pt.params.B1 = value;
      if (mode == Mode::line_b1eqnegb2) pt.params.B2 = -value;
      break;
    case Axis::B2: pt.params.B2 = value; break;
    case Axis::K: pt.params.K = value; break;
    case Axis::T: pt.temperature = value; break;
  }
}

// Cartesian product of the axis values, first axis outermost.
std::vector<std::vector<double>> grid_coordinates(const SweepConfig& cfg,
                                                  const std::vector<Axis>& axes) {
  std::vector<std::vector<double>> coords{{}};
  for (Axis a : axes) {
    const Vector vals = cfg.range(a).values();
    std::vector<std::vector<double>> next;
    next.reserve(coords.size() * vals.size());
    for (const auto& prefix : coords)
      for (double v : vals) {
        auto row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    coords = std::move(next);
  }
  return coords;
}

Point point_for(const SweepConfig& cfg, const std::vector<Axis>& axes,
                const std::vector<double>& coord) {
  Point pt{cfg.params, cfg.temperature};
  for (std::size_t i = 0; i < axes.size(); ++i) apply_axis(pt, cfg.mode, axes[i], coord[i]);
  return pt;
}

std::vector<std::string> axis_header(const std::vector<Axis>& axes) {
  std::vector<std::string> h;
  for (Axis a : axes) h.emplace_back(axis_name(a));
  return h;
}

void require_finite(double v, std::string_view what) {
  if (!std::isfinite(v)) throw consistency_error("non-finite value for " + std::string(what));
}

}  // namespace

std::string_view mode_name(Mode m) {
  for (const auto& [mode, name] : kModeNames)
    if (mode == m) return name;
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  for (const auto& [mode, name] : kModeNames)
    if (name == s) return mode;
  return std::nullopt;
}

std::string_view axis_name(Axis a) {
  for (const auto& [axis, name] : kAxisNames)
    if (axis == a) return name;
  return "?";
}

std::optional<Axis> parse_axis(std::string_view s) {
  for (const auto& [axis, name] : kAxisNames)
    if (name == s) return axis;
  return std::nullopt;
}

Vector AxisRange::values() const {
  Vector v(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + step * static_cast<double>(i);
  v.back() = stop;
  return v;
}

AxisRange parse_range(std::string_view s) {
  const std::string text = trim(s);
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw config_error("range must be start:stop:count, got '" + text + "'");
  AxisRange r;
  r.start = parse_double("range start", text.substr(0, c1));
  r.stop = parse_double("range stop", text.substr(c1 + 1, c2 - c1 - 1));
  const long n = parse_long("range count", text.substr(c2 + 1));
  if (n < 2) throw config_error("range count must be >= 2");
  r.count = static_cast<std::size_t>(n);
  if (!(r.start < r.stop)) throw config_error("range start must be below stop");
  return r;
}

AxisRange default_range(Axis a) {
  switch (a) {
    case Axis::B1:
    case Axis::B2: return {-6.0, 6.0, 101};
    case Axis::K: return {-2.0, 0.0, 101};
    case Axis::T: return {0.01, 2.0, 101};
  }
  return {};
}

AxisRange SweepConfig::range(Axis a) const {
  const auto it = ranges.find(a);
  return it == ranges.end() ? default_range(a) : it->second;
}

void SweepConfig::validate() const {
  for (const auto& [axis, r] : ranges) {
    if (r.count < 2) throw config_error("range count must be >= 2");
    if (!(r.start < r.stop)) throw config_error("range start must be below stop");
  }
  const auto axes = mode_axes(*this);
  const bool sweeps_t = std::find(axes.begin(), axes.end(), Axis::T) != axes.end();
  if (sweeps_t && !(range(Axis::T).start > 0.0))
    throw config_error("temperature range must start above zero");
  const bool needs_t = mode != Mode::spectrum && mode != Mode::threshold;
  if (needs_t && !sweeps_t && !(temperature > 0.0))
    throw config_error("temperature must be positive");
  if ((mode == Mode::threshold || mode == Mode::spectrum) && scan_axis == Axis::T)
    throw config_error("the scan axis of this mode must be one of K, B1, B2");
  if (mode == Mode::threshold) {
    if (!(ts_scan.t_max > 0.0)) throw config_error("ts-tmax must be positive");
    if (ts_scan.grid < 2) throw config_error("ts-grid must be >= 2");
  }
  for (const auto* p : {&params.J, &params.K, &params.B1, &params.B2})
    if (!std::isfinite(*p)) throw config_error("model parameters must be finite");
}

std::vector<Axis> mode_axes(const SweepConfig& cfg) {
  switch (cfg.mode) {
    case Mode::grid_b1b2: return {Axis::B1, Axis::B2};
    case Mode::line_b1eqnegb2: return {Axis::B1};
    case Mode::grid_kt: return {Axis::K, Axis::T};
    case Mode::grid_b2t: return {Axis::B2, Axis::T};
    case Mode::bounds_scan: return {Axis::B1};
    case Mode::densecode_scan: return {Axis::K};
    case Mode::threshold:
    case Mode::spectrum: return {cfg.scan_axis};
  }
  return {};
}

std::vector<Measure> effective_measures(const SweepConfig& cfg) {
  if (!cfg.measures.empty()) return cfg.measures;
  switch (cfg.mode) {
    case Mode::bounds_scan: return {Measure::chen_lb, Measure::alb, Measure::ub};
    case Mode::densecode_scan:
      return {Measure::negativity, Measure::cdc, Measure::udc_12, Measure::udc_21};
    default: return {Measure::negativity};
  }
}

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no column " + std::string(name));
  return static_cast<std::size_t>(it - header.begin());
}

Table run_sweep(const SweepConfig& cfg, Execution exec) {
  cfg.validate();
  if (cfg.mode == Mode::threshold || cfg.mode == Mode::spectrum)
    throw config_error("run_sweep does not handle mode " + std::string(mode_name(cfg.mode)));
  const auto axes = mode_axes(cfg);
  const auto measures = effective_measures(cfg);
  const auto coords = grid_coordinates(cfg, axes);

  Table t;
  t.header = axis_header(axes);
  for (Measure m : measures) t.header.emplace_back(measure_name(m));
  t.rows.resize(coords.size());

  for_each_index(coords.size(), exec, [&](std::size_t i) {
    const Point pt = point_for(cfg, axes, coords[i]);
    const Spectrum s = sym_eig(hamiltonian_qutrit(pt.params));
    const Vector w = boltzmann_weights(s.values, pt.temperature);
    const DensityMatrix rho = gibbs(s, pt.temperature, kTwoQutrits);
    const auto vals = evaluate_measures(rho, s, w, measures);
    auto& row = t.rows[i];
    row.reserve(coords[i].size() + vals.size());
    for (double c : coords[i]) row.emplace_back(c);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      require_finite(vals[k], measure_name(measures[k]));
      row.emplace_back(vals[k]);
    }
  });
  return t;
}

Table run_threshold(const SweepConfig& cfg, Execution exec) {
  cfg.validate();
  const std::vector<Axis> axes{cfg.scan_axis};
  const auto coords = grid_coordinates(cfg, axes);

  Table t;
  t.header = axis_header(axes);
  t.header.emplace_back("ts_negativity");
  if (cfg.threshold_alb) t.header.emplace_back("ts_alb");
  t.header.emplace_back("tstar");
  t.rows.resize(coords.size());

  const StateMeasure neg = [](const DensityMatrix& rho) { return negativity(rho); };
  const StateMeasure lb = [](const DensityMatrix& rho) { return alb(rho); };
  const MultipartiteDims dims(kTwoQutrits);

  for_each_index(coords.size(), exec, [&](std::size_t i) {
    const Point pt = point_for(cfg, axes, coords[i]);
    const Spectrum s = sym_eig(hamiltonian_qutrit(pt.params));
    auto& row = t.rows[i];
    row.emplace_back(coords[i][0]);
    // The point loop is the parallel one; each scan runs serially.
    row.push_back(estimate_ts(s, kTwoQutrits, neg, cfg.ts_scan, Execution::serial));
    if (cfg.threshold_alb)
      row.push_back(estimate_ts(s, kTwoQutrits, lb, cfg.ts_scan, Execution::serial));
    row.push_back(tstar(s, dims));
  });
  return t;
}

Table run_spectrum(const SweepConfig& cfg, Execution exec) {
  cfg.validate();
  const std::vector<Axis> axes{cfg.scan_axis};
  const auto coords = grid_coordinates(cfg, axes);

  Table t;
  t.header = axis_header(axes);
  for (int k = 1; k <= 9; ++k) t.header.push_back("E" + std::to_string(k));
  t.header.emplace_back("residual");
  t.rows.resize(coords.size());

  for_each_index(coords.size(), exec, [&](std::size_t i) {
    const Point pt = point_for(cfg, axes, coords[i]);
    const auto cf = closed_form_energies(pt.params);
    const auto block = central_block_energies(pt.params);
    const std::array<double, 9> e{cf.e1,    cf.e2,    cf.e3, block[0], block[1],
                                  block[2], cf.e7,    cf.e8, cf.e9};
    Vector numeric = sym_eigvals(hamiltonian_qutrit(pt.params));
    std::array<double, 9> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    double residual = 0.0;
    for (std::size_t k = 0; k < 9; ++k) residual = std::max(residual, std::abs(sorted[k] - numeric[k]));

    auto& row = t.rows[i];
    row.emplace_back(coords[i][0]);
    for (double x : e) row.emplace_back(x);
    row.emplace_back(residual);
  });
  return t;
}

Table run(const SweepConfig& cfg, Execution exec) {
  switch (cfg.mode) {
    case Mode::threshold: return run_threshold(cfg, exec);
    case Mode::spectrum: return run_spectrum(cfg, exec);
    default: return run_sweep(cfg, exec);
  }
}

std::string format_value(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (row[i]) os << format_value(*row[i]);
    }
    os << '\n';
  }
}

KeyValues parse_key_values(std::istream& is) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(std::string_view(s).substr(0, eq));
    if (key.empty()) throw config_error("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(std::string_view(s).substr(eq + 1));
  }
  return kv;
}

SweepConfig config_from_key_values(const KeyValues& kv, Mode default_mode) {
  SweepConfig cfg;
  cfg.mode = default_mode;
  for (const auto& [key, value] : kv) {
    if (key == "mode") {
      const auto m = parse_mode(value);
      if (!m) throw config_error("unknown mode '" + value + "'");
      cfg.mode = *m;
    } else if (key == "J") {
      cfg.params.J = parse_double(key, value);
    } else if (key == "K") {
      cfg.params.K = parse_double(key, value);
    } else if (key == "B1") {
      cfg.params.B1 = parse_double(key, value);
    } else if (key == "B2") {
      cfg.params.B2 = parse_double(key, value);
    } else if (key == "T") {
      cfg.temperature = parse_double(key, value);
    } else if (key.starts_with("range-")) {
      const auto axis = parse_axis(std::string_view(key).substr(6));
      if (!axis) throw config_error("unknown range axis in '" + key + "'");
      cfg.ranges[*axis] = parse_range(value);
    } else if (key == "measures") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const std::string name = trim(item);
        const auto m = parse_measure(name);
        if (!m) throw config_error("unknown measure '" + name + "'");
        cfg.measures.push_back(*m);
      }
      if (cfg.measures.empty()) throw config_error("measures list is empty");
    } else if (key == "axis") {
      const auto a = parse_axis(value);
      if (!a) throw config_error("unknown axis '" + value + "'");
      cfg.scan_axis = *a;
    } else if (key == "alb") {
      cfg.threshold_alb = parse_bool(key, value);
    } else if (key == "ts-tmax") {
      cfg.ts_scan.t_max = parse_double(key, value);
    } else if (key == "ts-grid") {
      cfg.ts_scan.grid = static_cast<int>(parse_long(key, value));
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_long(key, value));
    } else {
      throw config_error("unknown configuration key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace qtherm
