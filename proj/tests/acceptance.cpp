// Acceptance suite: one test case per numbered criterion, each printing a single
// [PASS]/[FAIL] line with the measured figures.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "vibronic/dynamics.hpp"
#include "vibronic/report.hpp"
#include "vibronic/spectrum.hpp"

using namespace vibronic;
using vibronic::testing::find_crossing;

namespace {

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %02d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

std::vector<AvoidedCrossing> window_crossings(TrapModel trap, ScanAxis axis, DriveParams drive,
                                              double lo, double hi, int steps, int n_trunc) {
  return find_avoided_crossings(scan(ScanSpec{trap, drive, axis, lo, hi, steps, n_trunc}));
}

struct MeasuredGap {
  double param = 0.0;
  double gap = 0.0;
  double leading = 0.0;
  bool found = false;
};

MeasuredGap locate(const std::vector<AvoidedCrossing>& crossings, BranchLabel a, BranchLabel b,
                   double near_param, double window) {
  const AvoidedCrossing* c = find_crossing(crossings, a, b, near_param, window);
  if (c == nullptr) return {};
  return {c->param_star, c->gap, c->predicted ? c->predicted->leading : 0.0, true};
}

// The standard gap set behind criteria 2-6, parameterized by truncation.
std::map<std::string, MeasuredGap> measure_gap_set(int n_trunc) {
  std::map<std::string, MeasuredGap> gaps;
  const DriveParams rabi_drive{0.0, 0.0, 0.1};

  const auto w1 = window_crossings(harmonic_trap(), ScanAxis::Rabi, rabi_drive, 0.85, 1.15, 121,
                                   n_trunc);
  for (int n = 0; n <= 2; ++n) {
    gaps["sideband_l1_n" + std::to_string(n)] =
        locate(w1, {n, +1}, {n + 1, -1}, 1.0, 0.05);
  }
  for (int l = 2; l <= 4; ++l) {
    const double center = l;
    const auto w = window_crossings(harmonic_trap(), ScanAxis::Rabi, rabi_drive, center - 0.15,
                                    center + 0.15, 121, n_trunc);
    gaps["rabi_l" + std::to_string(l)] = locate(w, {0, +1}, {l, -1}, center, 0.1);
  }

  const DriveParams weak_drive{0.01, 0.0, 0.1};
  const auto blue = window_crossings(harmonic_trap(), ScanAxis::Detuning, weak_drive, 0.95, 1.05,
                                     81, n_trunc);
  gaps["weak_blue_n0"] = locate(blue, {0, +1}, {1, -1}, 1.0, 0.02);
  gaps["weak_blue_n1"] = locate(blue, {1, +1}, {2, -1}, 1.0, 0.02);
  const auto red = window_crossings(harmonic_trap(), ScanAxis::Detuning, weak_drive, -1.05, -0.95,
                                    81, n_trunc);
  gaps["weak_red_n0"] = locate(red, {0, +1}, {1, -1}, -1.0, 0.02);

  const auto hw = window_crossings(hardwall_trap(), ScanAxis::Rabi, {0.0, 0.0, 0.1}, 2.8, 3.2, 81,
                                   n_trunc);
  gaps["hardwall_12"] = locate(hw, {1, +1}, {2, -1}, 3.0, 0.1);
  return gaps;
}

}  // namespace

TEST_CASE("criterion 01: coupling closed forms match the quadrature oracle") {
  double worst = 0.0;
  for (TrapModel trap : {harmonic_trap(), hardwall_trap()}) {
    std::vector<double> etas = {0.1, 0.4, 1.0};
    if (trap.kind == TrapKind::HardWall) {
      etas.push_back(1.999);
      etas.push_back(2.001);
    }
    for (double eta : etas) {
      for (int n = trap.n_min(); n <= trap.n_min() + 10; ++n) {
        for (int np = n; np <= trap.n_min() + 10; ++np) {
          const double err =
              std::abs(coupling_exact(trap, n, np, eta) - coupling_quadrature_oracle(trap, n, np, eta));
          worst = std::max(worst, err);
        }
      }
    }
  }
  const bool ok = worst < 1e-9;
  report(1, ok, fmt("coupling oracle equivalence, max |closed - quadrature| = %.2e (tol 1e-9)",
                    worst));
  CHECK(ok);
}

TEST_CASE("criterion 02: first-resonance splittings at delta = 0") {
  const auto gaps = measure_gap_set(40);
  bool ok = true;
  double worst = 0.0;
  for (int n = 0; n <= 2; ++n) {
    const MeasuredGap g = gaps.at("sideband_l1_n" + std::to_string(n));
    ok = ok && g.found;
    if (!g.found) continue;
    const double rel = std::abs(g.gap - g.leading) / g.leading;  // eta omega_r sqrt(n+1) at p*
    worst = std::max(worst, rel);
    ok = ok && rel < 0.05;
    CHECK(rel < 0.05);
  }
  // n = 0 against the fixed value eta*omega_T = 0.1.
  const MeasuredGap g0 = gaps.at("sideband_l1_n0");
  const double rel0 = std::abs(g0.gap - 0.1) / 0.1;
  ok = ok && rel0 < 0.05;
  CHECK(rel0 < 0.05);
  report(2, ok,
         fmt("gap vs eta*omega_r*sqrt(n+1) for n=0,1,2: max dev %.2f%% (tol 5%%); "
             "n=0 vs eta*omega_T dev %.2f%%",
             100.0 * worst, 100.0 * rel0));
}

TEST_CASE("criterion 03: parity selection along the Rabi axis") {
  const auto gaps = measure_gap_set(40);
  bool even_ok = true, odd_ok = true;
  double g2 = 0.0, g4 = 0.0;
  for (int l : {2, 4}) {
    const MeasuredGap g = gaps.at("rabi_l" + std::to_string(l));
    (l == 2 ? g2 : g4) = g.gap;
    even_ok = even_ok && g.found && g.gap < 1e-9;
    CHECK(g.found);
    CHECK(g.gap < 1e-9);
  }
  double dev1 = 0.0, dev3 = 0.0, ratio3 = 0.0;
  {
    const MeasuredGap g = gaps.at("sideband_l1_n0");
    dev1 = std::abs(g.gap - g.leading) / g.leading;
    odd_ok = odd_ok && g.found && dev1 < 0.10;
    CHECK(dev1 < 0.10);
  }
  {
    const MeasuredGap g = gaps.at("rabi_l3");
    ratio3 = g.gap / g.leading;
    dev3 = std::abs(g.gap - g.leading) / g.leading;
    odd_ok = odd_ok && g.found && dev3 < 0.10;
    // Known failure: the measured l=3 gap is 1/8 of the first-order value
    // (higher-order paths through the strong first sidebands enter at the same
    // eta^3 order once Omega_R = 3 omega_T; the 1/8 coefficient is stable as
    // eta -> 0 and independent of truncation).
    CHECK(dev3 < 0.10);
  }
  const bool ok = even_ok && odd_ok;
  report(3, ok,
         fmt("even-l true crossings: gap(l=2) = %.1e, gap(l=4) = %.1e (tol 1e-9); ", g2, g4) +
             fmt("odd-l vs leading: l=1 dev %.2f%%, l=3 dev %.1f%% (tol 10%%, gap/leading = "
                 "%.4f)",
                 100.0 * dev1, 100.0 * dev3, ratio3));
}

TEST_CASE("criterion 04: weak-field sideband gaps") {
  const auto gaps = measure_gap_set(40);
  const DriveParams drive{0.01, 0.0, 0.1};
  struct Item {
    const char* key;
    int n;
  };
  bool ok = true;
  double worst = 0.0;
  for (const Item item : {Item{"weak_blue_n0", 0}, Item{"weak_red_n0", 0}, Item{"weak_blue_n1", 1}}) {
    const MeasuredGap g = gaps.at(item.key);
    ok = ok && g.found;
    if (!g.found) continue;
    const double expected = weakfield_splitting(harmonic_trap(), item.n, item.n + 1, drive);
    const double rel = std::abs(g.gap - expected) / expected;
    worst = std::max(worst, rel);
    ok = ok && rel < 0.01;
    CHECK(rel < 0.01);
  }
  report(4, ok, fmt("gap at delta = +-1 vs |Omega_{n,n+1}|: max dev %.3f%% (tol 1%%)",
                    100.0 * worst));
}

TEST_CASE("criterion 05: oscillation frequencies match the measured gaps") {
  const auto gaps = measure_gap_set(40);
  bool ok = true;
  double dev_strong = 1.0, dev_weak = 1.0, worst_norm = 0.0;

  {
    const MeasuredGap g = gaps.at("sideband_l1_n0");
    ok = ok && g.found;
    const DriveParams drive{g.param, 0.0, 0.1};
    const HamiltonianMatrix h = build_full_hamiltonian(harmonic_trap(), drive, 40);
    const Eigen::VectorXcd psi0 =
        embed_semidressed(semidressed_spectrum(harmonic_trap(), drive, 0).plus, h.basis);
    const EvolutionTrace trace =
        evolve(h, psi0, 10.0 * 2.0 * std::numbers::pi / g.gap, 2048, Frame::Semidressed);
    for (double norm : trace.norm_history) {
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    }
    const FrequencyEstimate est = extract_frequency(trace, "1-");
    dev_strong = std::abs(est.omega - g.gap) / g.gap;
    ok = ok && est.has_peak && dev_strong < 0.05 && worst_norm < 1e-10;
    CHECK(est.has_peak);
    CHECK(dev_strong < 0.05);
  }
  {
    const MeasuredGap g = gaps.at("weak_blue_n0");
    ok = ok && g.found;
    const DriveParams drive{0.01, g.param, 0.1};
    const HamiltonianMatrix h = build_full_hamiltonian(harmonic_trap(), drive, 40);
    const EvolutionTrace trace = evolve(h, basis_state(h.basis, Internal::g, 0),
                                        10.0 * 2.0 * std::numbers::pi / g.gap, 2048, Frame::Bare);
    for (double norm : trace.norm_history) {
      worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
    }
    const FrequencyEstimate est = extract_frequency(trace, "e1");
    dev_weak = std::abs(est.omega - g.gap) / g.gap;
    ok = ok && est.has_peak && dev_weak < 0.05 && worst_norm < 1e-10;
    CHECK(est.has_peak);
    CHECK(dev_weak < 0.05);
  }
  CHECK(worst_norm < 1e-10);
  report(5, ok,
         fmt("freq vs gap dev: strong %.2f%%, weak %.2f%% (tol 5%%); max norm drift %.1e "
             "(tol 1e-10)",
             100.0 * dev_strong, 100.0 * dev_weak, worst_norm));
}

TEST_CASE("criterion 06: hard-wall (1,2) splitting") {
  const auto gaps = measure_gap_set(40);
  const MeasuredGap g = gaps.at("hardwall_12");
  bool ok = g.found;
  double rel = 1.0;
  if (g.found) {
    const double expected = 4.0 * g.param * 1.0 * 2.0 / 9.0 * (2.0 * 0.1 / std::numbers::pi);
    rel = std::abs(g.gap - expected) / expected;
    ok = ok && rel < 0.10;
  }
  CHECK(ok);
  report(6, ok, fmt("gap %.5f vs leading 4*omega_r*n*n'/(l^2(2n+l)^2)*(2eta/pi): dev %.2f%% "
                    "(tol 10%%)",
                    g.gap, 100.0 * rel));
}

TEST_CASE("criterion 07: sideband ratio sign pattern") {
  bool ok = true;
  for (double eta : {0.1, 0.2, 0.3}) {
    for (int l : {1, 2}) {
      const double r = sideband_ratio(l, eta);
      ok = ok && r < 0.0;
      CHECK(r < 0.0);
    }
    for (int l : {3, 4, 5}) {
      const double r = sideband_ratio(l, eta);
      ok = ok && r > 0.0;
      CHECK(r > 0.0);
    }
  }
  report(7, ok, "log10 R < 0 for l in {1,2} and > 0 for l in {3,4,5} at eta in {0.1,0.2,0.3}");
}

TEST_CASE("criterion 08: carrier coupling ordering and spot values") {
  bool ordered = true;
  for (double eta = 0.05; eta <= 1.0 + 1e-12; eta += 0.05) {
    const CarrierRow row = carrier_comparison({eta}).front();
    ordered = ordered && row.hardwall > row.harmonic;
    CHECK(row.hardwall > row.harmonic);
  }
  const CarrierRow spot = carrier_comparison({0.5}).front();
  const double dev_harm = std::abs(spot.harmonic - 0.88250);
  const double dev_hw = std::abs(spot.hardwall - 0.96029);
  const double oracle_harm =
      std::abs(std::abs(coupling_quadrature_oracle(harmonic_trap(), 0, 0, 0.5)) - spot.harmonic);
  const double oracle_hw =
      std::abs(std::abs(coupling_quadrature_oracle(hardwall_trap(), 1, 1, 0.5)) - spot.hardwall);
  const bool ok =
      ordered && dev_harm < 1e-4 && dev_hw < 1e-4 && oracle_harm < 1e-9 && oracle_hw < 1e-9;
  CHECK(dev_harm < 1e-4);
  CHECK(dev_hw < 1e-4);
  CHECK(oracle_harm < 1e-9);
  CHECK(oracle_hw < 1e-9);
  report(8, ok,
         fmt("hard wall > harmonic on (0,1]; spot eta=0.5: harmonic %.6f, hard wall %.6f "
             "(quadrature-confirmed)",
             spot.harmonic, spot.hardwall));
}

TEST_CASE("criterion 09: weak-field limit of the general splitting") {
  const double delta = 1.0 / std::sqrt(1.0 + 0.05 * 0.05);  // Omega = 1 with omega_r/delta = 0.05
  const DriveParams drive{0.05 * delta, delta, 0.1};
  const double general = perturbative_splitting_general(harmonic_trap(), 0, 1, drive).general;
  const double weak = weakfield_splitting(harmonic_trap(), 0, 1, drive);
  const double rel = std::abs(general - weak) / weak;
  const bool ok = rel < 0.05;
  CHECK(ok);
  report(9, ok, fmt("general %.6e vs weak-field %.6e: dev %.4f%% (tol 5%%)", general, weak,
                    100.0 * rel));
}

TEST_CASE("criterion 10: truncation robustness of the reported gaps") {
  const auto g40 = measure_gap_set(40);
  const auto g60 = measure_gap_set(60);
  bool ok = true;
  double worst = 0.0;
  for (const auto& [key, g] : g40) {
    const MeasuredGap h = g60.at(key);
    ok = ok && g.found && h.found;
    if (!g.found || !h.found) continue;
    const double change = std::abs(g.gap - h.gap);
    worst = std::max(worst, change);
    ok = ok && change < 1e-8;
    CHECK(change < 1e-8);
  }
  report(10, ok, fmt("max gap change N_trunc 40 -> 60: %.2e (tol 1e-8) over %.0f gaps", worst,
                     static_cast<double>(g40.size())));
}
