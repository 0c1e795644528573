#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vibronic/coupling.hpp"
#include "vibronic/dynamics.hpp"
#include "vibronic/resonance.hpp"
#include "vibronic/spectrum.hpp"

namespace vibronic {

// log10 of |chi_{1,1+l}| / |Omega_{0,l}|: hard-wall vs harmonic coupling strength
// for the l-th sideband from each trap's ground state.  Throws NumericalError if
// the harmonic coupling vanishes.
double sideband_ratio(int l, double eta);

struct RatioRow {
  int l = 0;
  double eta = 0.0;
  double log10_ratio = 0.0;
};

std::vector<RatioRow> ratio_table(const std::vector<int>& ls, const std::vector<double>& etas);

// Carrier coupling magnitudes |Omega_00|/Omega_R (harmonic) and |chi_11|/Omega_R
// (hard wall) per eta.
struct CarrierRow {
  double eta = 0.0;
  double harmonic = 0.0;
  double hardwall = 0.0;
};

std::vector<CarrierRow> carrier_comparison(const std::vector<double>& eta_grid);

// ---- serialization ----------------------------------------------------------

enum class OutputFormat { Csv, Json };

// %.12g; CSV number format.  JSON uses shortest round-trip via the JSON library.
std::string format_number(double x);

struct SplittingReport {
  TrapModel trap;
  int n = 0;
  int n_prime = 0;
  DriveParams drive;
  double weakfield = 0.0;
  SplittingPrediction prediction;
  bool isolated = false;
  double isolation = 0.0;
};

void write_couplings(std::ostream& out, const CouplingMatrix& coupling, OutputFormat format);
void write_scan(std::ostream& out, const LevelTrack& track, OutputFormat format);
void write_crossings(std::ostream& out, const std::vector<AvoidedCrossing>& crossings,
                     OutputFormat format);
void write_resonances(std::ostream& out, const std::vector<ResonanceSpec>& specs,
                      OutputFormat format);
void write_splitting(std::ostream& out, const SplittingReport& report, OutputFormat format);
void write_dynamics(std::ostream& out, const EvolutionTrace& trace, OutputFormat format);
void write_ratio_table(std::ostream& out, const std::vector<RatioRow>& rows, OutputFormat format);
void write_carrier_table(std::ostream& out, const std::vector<CarrierRow>& rows,
                         OutputFormat format);
void write_convergence(std::ostream& out, const ConvergenceReport& report, OutputFormat format);

}  // namespace vibronic
