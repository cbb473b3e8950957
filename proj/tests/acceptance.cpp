// Acceptance checks: one [PASS]/[FAIL] line per criterion.
// Usage: qtherm_acceptance [--only N]

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qtherm/densecode.hpp"
#include "qtherm/entanglement.hpp"
#include "qtherm/report.hpp"
#include "qtherm/sweep.hpp"
#include "qtherm/thermal.hpp"
#include "support.hpp"

using namespace qtherm;
using qtherm::testing::Rng;
using qtherm::testing::uniform;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

DensityMatrix thermal_rho(const QutritChainParams& p, double t) {
  return gibbs(sym_eig(hamiltonian_qutrit(p)), t, kTwoQutrits);
}

double thermal_negativity(const QutritChainParams& p, double t) { return negativity(thermal_rho(p, t)); }

Outcome closed_form_spectrum() {
  Rng rng(1001);
  double worst_single = 0.0, worst_full = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const QutritChainParams p = qtherm::testing::random_params(rng, 3.0);
    const Vector numeric = sym_eigvals(hamiltonian_qutrit(p));
    const auto closed = closed_form_energies(p).as_array();
    for (double e : closed) {
      double best = INFINITY;
      for (double x : numeric) best = std::min(best, std::abs(x - e));
      worst_single = std::max(worst_single, best);
    }
    Vector all(closed.begin(), closed.end());
    const auto block = central_block_energies(p);
    all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < 9; ++k) worst_full = std::max(worst_full, std::abs(all[k] - numeric[k]));
  }
  return {worst_single < 1e-9 && worst_full < 1e-9,
          fmt("max closed-form miss %.3g, max full-spectrum miss %.3g (limit 1e-9)", worst_single, worst_full)};
}

Outcome negativity_jump() {
  const double lo = -1.0, step = 0.002;
  const int n = 1001;
  Vector b2(n), neg(n);
  for (int i = 0; i < n; ++i) {
    b2[i] = lo + step * i;
    neg[i] = thermal_negativity({-1.0, -1.7, 3.0, b2[i]}, 0.02);
  }
  double biggest = 0.0, where = 0.0;
  for (int i = 1; i < n; ++i) {
    const double d = std::abs(neg[i] - neg[i - 1]);
    if (d > biggest) {
      biggest = d;
      where = 0.5 * (b2[i] + b2[i - 1]);
    }
  }
  const bool pass = biggest > 0.05 && std::abs(where - 0.148) <= 0.005;
  return {pass, fmt("largest step %.4g at B2 = %.4f (need > 0.05 at 0.148 +- 0.005)", biggest, where)};
}

Outcome xy_crossing() {
  const XYParams at{1.0, 0.8, 0.6};
  const auto e = xy_closed_form_energies(at);
  const double gap = std::abs(e[1] - e[3]);
  const Vector numeric = sym_eigvals(hamiltonian_xy(at));
  const double numeric_gap = std::abs(numeric[1] - numeric[0]);
  // E4 is the ground state just above the crossing, E2 just below.
  const auto above = xy_closed_form_energies({1.0, 0.8, 0.61});
  const auto below = xy_closed_form_energies({1.0, 0.8, 0.59});
  const bool order = above[3] < above[1] && below[1] < below[3];
  return {gap < 1e-12 && numeric_gap < 1e-12 && order,
          fmt("|E2-E4| = %.3g, numeric lowest-pair gap %.3g, ordering flips: %s", gap, numeric_gap,
              order ? "yes" : "no")};
}

Outcome symmetry() {
  const Vector axis = AxisRange{-4.0, 4.0, 21}.values();
  double swap = 0.0, flip = 0.0;
  for (double b1 : axis)
    for (double b2 : axis) {
      const double n = thermal_negativity({-1.0, -1.7, b1, b2}, 1.0);
      swap = std::max(swap, std::abs(n - thermal_negativity({-1.0, -1.7, b2, b1}, 1.0)));
      flip = std::max(flip, std::abs(n - thermal_negativity({-1.0, -1.7, -b1, -b2}, 1.0)));
    }
  return {swap < 1e-10 && flip < 1e-10, fmt("max swap defect %.3g, max reversal defect %.3g", swap, flip)};
}

Outcome ground_k_trend() {
  Vector ks, ns;
  for (int i = 0; i <= 8; ++i) {
    ks.push_back(-0.25 * i);
    ns.push_back(thermal_negativity({-1.0, ks.back(), 1.3, -1.3}, 0.01));
  }
  const auto m = static_cast<std::size_t>(std::min_element(ns.begin(), ns.end()) - ns.begin());
  bool shape = true;
  for (std::size_t i = 1; i <= m; ++i) shape = shape && ns[i] <= ns[i - 1] + 1e-12;
  for (std::size_t i = m + 1; i < ns.size(); ++i) shape = shape && ns[i] >= ns[i - 1] - 1e-12;
  const bool near_one = std::abs(ks[m] + 1.0) <= 0.25;
  const bool pass = shape && near_one && ns.back() > ns.front();
  std::string values;
  for (double n : ns) values += fmt(" %.4f", n);
  return {pass, fmt("minimum at K = %.2f, N(0) = %.4f, N(-2) = %.4f; N:%s", ks[m], ns.front(), ns.back(),
                    values.c_str())};
}

Outcome threshold_ordering() {
  const StateMeasure neg = [](const DensityMatrix& r) { return negativity(r); };
  bool ordered = true, increasing = true;
  std::optional<double> previous;
  std::string values;
  for (int i = 0; i <= 8; ++i) {
    const double k = -0.25 * i + 0.0;
    const Spectrum s = sym_eig(hamiltonian_qutrit({-1.0, k, 1.3, -1.3}));
    const auto ts = estimate_ts(s, kTwoQutrits, neg);
    const auto star = tstar(s, MultipartiteDims(kTwoQutrits));
    if (ts) ordered = ordered && star && *star >= *ts;
    if (k <= -1.0) {
      increasing = increasing && ts && (!previous || *ts > *previous);
      previous = ts;
    }
    values += fmt(" K=%.2f:%.4g/%.4g", k, ts ? *ts : NAN, star ? *star : NAN);
  }
  return {ordered && increasing,
          fmt("tstar >= ts: %s, ts increasing on [-2,-1]: %s; ts/tstar%s", ordered ? "yes" : "no",
              increasing ? "yes" : "no", values.c_str())};
}

Outcome purity_monotone() {
  Rng rng(1007);
  const double h = 1e-5;
  double worst_fd = 0.0, lowest = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = qtherm::testing::random_spectrum(rng, 9);
    const double beta = uniform(rng, 0.2, 1.5);
    auto p = [&](double b) { return purity(gibbs_state(s, 1.0 / b).density()); };
    const double fd = (p(beta + h) - p(beta - h)) / (2.0 * h);
    const double analytic = purity_beta_derivative(gibbs_state(s, 1.0 / beta));
    worst_fd = std::max(worst_fd, std::abs(fd - analytic));
    lowest = std::min(lowest, analytic);
  }
  return {worst_fd < 1e-7 && lowest >= -1e-12,
          fmt("max |analytic - finite difference| %.3g, min derivative %.3g", worst_fd, lowest)};
}

Outcome dense_coding_landmarks() {
  const double log3 = std::log2(3.0);
  const double singlet_cdc = cdc(dm_from_pure(singlet(), kTwoQubits));
  const double product_cdc = cdc(dm_from_pure(kron(basis_vector(3, 0), basis_vector(3, 2)), kTwoQutrits));
  const double me_cdc = cdc(dm_from_pure(max_entangled(3), kTwoQutrits));
  const double worst = std::max({std::abs(singlet_cdc - 2.0), std::abs(product_cdc - log3),
                                 std::abs(me_cdc - 2.0 * log3)});
  return {worst <= 1e-12, fmt("singlet %.15f, product %.15f, max entangled %.15f (max error %.3g)",
                              singlet_cdc, product_cdc, me_cdc, worst)};
}

Outcome averaging_identity() {
  Rng rng(1009);
  const auto ops = heisenberg_weyl(3);
  double worst_avg = 0.0, worst_chi = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = qtherm::testing::random_density(rng, kTwoQutrits);
    const ComplexMatrix expect =
        to_complex(kron(Matrix::identity(3) * (1.0 / 3.0), partial_trace(rho, Subsystem::A)));
    worst_avg = std::max(worst_avg, frobenius_norm(average_state(rho, ops) - expect));
    worst_chi = std::max(worst_chi, std::abs(cdc(rho) - holevo_chi(dense_coding_ensemble(rho))));
  }
  return {worst_avg < 1e-12 && worst_chi < 1e-10,
          fmt("max averaging defect %.3g, max |cdc - chi| %.3g", worst_avg, worst_chi)};
}

Outcome bound_ordering() {
  Rng rng(1010);
  double chen_excess = -INFINITY, alb_excess = -INFINITY;
  for (int trial = 0; trial < 200; ++trial) {
    const QutritChainParams p = qtherm::testing::random_params(rng, 3.0);
    const double t = uniform(rng, 0.05, 3.0);
    const Spectrum s = sym_eig(hamiltonian_qutrit(p));
    const Vector w = boltzmann_weights(s.values, t);
    const DensityMatrix rho = gibbs(s, t, kTwoQutrits);
    const double ub = ub_mixture(s, w, kTwoQutrits);
    chen_excess = std::max(chen_excess, chen_lower_bound(rho) - ub);
    alb_excess = std::max(alb_excess, alb(rho) - ub);
  }
  const AntisymBasis basis(kTwoQutrits);
  double worst_pure = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Vector psi = qtherm::testing::random_unit_vector(rng, 9);
    double sum_sq = 0.0;
    for (const Matrix& tau : tau_matrices(dm_from_pure(psi, kTwoQutrits), basis)) sum_sq += tau(0, 0) * tau(0, 0);
    worst_pure = std::max(worst_pure, std::abs(std::sqrt(sum_sq) - iconcurrence_pure(psi, kTwoQutrits)));
  }
  return {chen_excess <= 1e-9 && alb_excess <= 1e-9 && worst_pure < 1e-9,
          fmt("max chen - UB %.3g, max alb - UB %.3g, max pure-state mismatch %.3g", chen_excess, alb_excess,
              worst_pure)};
}

// Largest (a - b) over a sweep table.
double max_gap(const Table& t, std::string_view a, std::string_view b, double* at) {
  double best = -INFINITY;
  for (const auto& row : t.rows) {
    const double g = *row[t.column(a)] - *row[t.column(b)];
    if (g > best) {
      best = g;
      *at = *row[0];
    }
  }
  return best;
}

Outcome bound_comparison() {
  SweepConfig a;
  a.mode = Mode::bounds_scan;
  a.params = {-1.0, -1.0, 0.0, -6.0};
  a.temperature = 0.3;
  a.ranges[Axis::B1] = {-10.0, 10.0, 401};
  a.measures = {Measure::chen_lb, Measure::alb};
  double at_a = 0.0;
  const double alb_wins = max_gap(run(a), "alb", "chen_lb", &at_a);

  SweepConfig b;
  b.mode = Mode::line_b1eqnegb2;
  b.params = {-1.0, -0.2, 0.0, 0.0};
  b.temperature = 0.5;
  b.ranges[Axis::B1] = {-10.0, 10.0, 401};
  b.measures = {Measure::chen_lb, Measure::alb};
  double at_b = 0.0;
  const double chen_wins = max_gap(run(b), "chen_lb", "alb", &at_b);

  return {alb_wins > 1e-9 && chen_wins > 1e-9,
          fmt("max alb - chen %.4g at B1 = %.3f (K=-1, T=0.3, B2=-6); max chen - alb %.4g at B1 = %.3f "
              "(K=-0.2, T=0.5, B2=-B1)",
              alb_wins, at_a, chen_wins, at_b)};
}

Outcome weak_npt() {
  SweepConfig cfg;
  cfg.mode = Mode::densecode_scan;
  cfg.params = {-1.0, 0.0, 0.0, 0.0};
  cfg.temperature = 0.05;
  cfg.ranges[Axis::K] = {-2.0, 0.0, 201};
  cfg.measures = {Measure::negativity, Measure::cdc};
  const Table t = run(cfg);
  const double limit = std::log2(3.0) - 0.01;
  int hits = 0;
  double first = NAN;
  for (const auto& row : t.rows)
    if (*row[1] > 0.01 && *row[2] < limit) {
      if (hits++ == 0) first = *row[0];
    }
  return {hits > 0, fmt("%d of %zu K values have N > 0.01 and cdc < log2(3) - 0.01 (first at K = %.3f)", hits,
                        t.rows.size(), first)};
}

Outcome performance() {
  SweepConfig cfg;
  cfg.mode = Mode::grid_b1b2;
  cfg.ranges[Axis::B1] = cfg.ranges[Axis::B2] = {-6.0, 6.0, 101};
  cfg.measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  const auto start = std::chrono::steady_clock::now();
  const Table t = run(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {secs < 60.0 && t.rows.size() == 101 * 101,
          fmt("%zu points with all 9 measures in %.2f s on %d thread(s) (limit 60 s)", t.rows.size(), secs,
              thread_count())};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
};

const std::vector<Criterion> kCriteria{
    {1, "closed-form spectrum", closed_form_spectrum},
    {2, "negativity jump at B2 = 0.148", negativity_jump},
    {3, "XY level crossing at B = 0.6", xy_crossing},
    {4, "field swap and reversal symmetry", symmetry},
    {5, "ground-state negativity vs K", ground_k_trend},
    {6, "threshold ordering and K trend", threshold_ordering},
    {7, "purity increases with beta", purity_monotone},
    {8, "dense coding landmarks", dense_coding_landmarks},
    {9, "averaging identity and cdc = chi", averaging_identity},
    {10, "bound ordering and pure-state consistency", bound_ordering},
    {11, "alb and Chen bound each win somewhere", bound_comparison},
    {12, "NPT state weaker than a product state", weak_npt},
    {13, "101x101 full-report sweep under 60 s", performance},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtherm acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
