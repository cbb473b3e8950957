#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "qtherm/numkernel.hpp"
#include "qtherm/qstate.hpp"
#include "qtherm/spinmodels.hpp"

namespace qtherm {

/// Per-state summary of every entanglement and dense-coding quantity.
struct BoundReport {
  double negativity = 0.0;
  double chen_lb = 0.0;
  double alb = 0.0;
  double ub = 0.0;
  double purity = 0.0;
  double entropy = 0.0;
  double cdc = 0.0;
  double udc_12 = 0.0;
  double udc_21 = 0.0;
};

enum class Measure { negativity, chen_lb, alb, ub, purity, entropy, cdc, udc_12, udc_21 };

inline constexpr std::array<Measure, 9> kAllMeasures{
    Measure::negativity, Measure::chen_lb, Measure::alb,    Measure::ub,    Measure::purity,
    Measure::entropy,    Measure::cdc,     Measure::udc_12, Measure::udc_21};

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

double field(const BoundReport& r, Measure m);

/// Full report for rho = sum_j w_j |v_j><v_j| (spectrum vectors as columns).
BoundReport bound_report(const DensityMatrix& rho, const Spectrum& spectrum,
                         std::span<const double> weights);

/// Report entries for the requested measures only, in the order given.
/// Skips the work behind measures that are not asked for.
std::vector<double> evaluate_measures(const DensityMatrix& rho, const Spectrum& spectrum,
                                      std::span<const double> weights,
                                      std::span<const Measure> measures);

/// Thermal state of the qutrit chain at temperature T (T > 0).
BoundReport thermal_report(const QutritChainParams& p, double temperature);

}  // namespace qtherm
