#include "qtherm/report.hpp"

#include <algorithm>
#include <cmath>

#include "qtherm/densecode.hpp"
#include "qtherm/entanglement.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::negativity: return "negativity";
    case Measure::chen_lb: return "chen_lb";
    case Measure::alb: return "alb";
    case Measure::ub: return "ub";
    case Measure::purity: return "purity";
    case Measure::entropy: return "entropy";
    case Measure::cdc: return "cdc";
    case Measure::udc_12: return "udc_12";
    case Measure::udc_21: return "udc_21";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures)
    if (measure_name(m) == name) return m;
  return std::nullopt;
}

double field(const BoundReport& r, Measure m) {
  switch (m) {
    case Measure::negativity: return r.negativity;
    case Measure::chen_lb: return r.chen_lb;
    case Measure::alb: return r.alb;
    case Measure::ub: return r.ub;
    case Measure::purity: return r.purity;
    case Measure::entropy: return r.entropy;
    case Measure::cdc: return r.cdc;
    case Measure::udc_12: return r.udc_12;
    case Measure::udc_21: return r.udc_21;
  }
  return 0.0;
}

namespace {

// Shared lazily-computed intermediates for one state.
class StateEvaluator {
 public:
  StateEvaluator(const DensityMatrix& rho, const Spectrum& spectrum, std::span<const double> w)
      : rho_(rho), spectrum_(spectrum), weights_(w) {}

  double get(Measure m) {
    switch (m) {
      case Measure::negativity: return neg();
      case Measure::chen_lb: {
        const double k = static_cast<double>(rho_.dims().min_local());
        return std::sqrt(8.0 / (k * (k - 1.0))) * neg();
      }
      case Measure::alb: return alb(weights_, spectrum_.vectors, AntisymBasis(rho_.dims()));
      case Measure::ub: return ub_mixture(spectrum_, weights_, rho_.dims());
      case Measure::purity: return purity(rho_);
      case Measure::entropy: return s_ab();
      case Measure::cdc:
        if (rho_.dims().a != rho_.dims().b) return cdc(rho_);
        return std::log2(static_cast<double>(rho_.dims().a)) + s_b() - s_ab();
      case Measure::udc_12: return std::max(s_b() - s_ab(), 0.0);
      case Measure::udc_21: return std::max(s_a() - s_ab(), 0.0);
    }
    return 0.0;
  }

 private:
  double neg() {
    if (!neg_) neg_ = negativity(rho_);
    return *neg_;
  }
  double s_ab() {
    // Eigenvalues of rho are the weights; no re-diagonalization needed.
    if (!s_ab_) {
      Vector p(weights_.begin(), weights_.end());
      s_ab_ = entropy_bits(p);
    }
    return *s_ab_;
  }
  double s_a() {
    if (!s_a_) s_a_ = vn_entropy(partial_trace(rho_, Subsystem::B));
    return *s_a_;
  }
  double s_b() {
    if (!s_b_) s_b_ = vn_entropy(partial_trace(rho_, Subsystem::A));
    return *s_b_;
  }

  const DensityMatrix& rho_;
  const Spectrum& spectrum_;
  std::span<const double> weights_;
  std::optional<double> neg_, s_ab_, s_a_, s_b_;
};

}  // namespace

std::vector<double> evaluate_measures(const DensityMatrix& rho, const Spectrum& spectrum,
                                      std::span<const double> weights,
                                      std::span<const Measure> measures) {
  if (weights.size() != spectrum.size() || spectrum.size() != rho.dim())
    throw precondition_error("evaluate_measures: inconsistent state decomposition");
  StateEvaluator ev(rho, spectrum, weights);
  std::vector<double> out;
  out.reserve(measures.size());
  for (Measure m : measures) out.push_back(ev.get(m));
  return out;
}

BoundReport bound_report(const DensityMatrix& rho, const Spectrum& spectrum,
                         std::span<const double> weights) {
  const auto v = evaluate_measures(rho, spectrum, weights, kAllMeasures);
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

BoundReport thermal_report(const QutritChainParams& p, double temperature) {
  const Spectrum s = sym_eig(hamiltonian_qutrit(p));
  const Vector w = boltzmann_weights(s.values, temperature);
  const DensityMatrix rho = gibbs(s, temperature, kTwoQutrits);
  return bound_report(rho, s, w);
}

}  // namespace qtherm
