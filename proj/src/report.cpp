#include "vibronic/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

using nlohmann::json;

json drive_json(const DriveParams& d) {
  return {{"omega_r", d.omega_r}, {"delta", d.delta}, {"eta", d.eta}};
}

json label_json(const BranchLabel& l) {
  return {{"n", l.n}, {"s", l.sign}};
}

void dump(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

double sideband_ratio(int l, double eta) {
  if (l < 0 || !(eta > 0.0)) throw DomainError("sideband_ratio needs l >= 0 and eta > 0");
  const double denom = std::abs(harmonic_coupling_exact(0, l, eta));
  if (denom < 1e-300) {
    throw NumericalError("harmonic coupling vanishes at l=" + std::to_string(l) +
                         ", eta=" + std::to_string(eta) + "; ratio singular");
  }
  return std::log10(std::abs(hardwall_coupling_exact(1, 1 + l, eta)) / denom);
}

std::vector<RatioRow> ratio_table(const std::vector<int>& ls, const std::vector<double>& etas) {
  std::vector<RatioRow> rows;
  for (const int l : ls) {
    for (const double eta : etas) rows.push_back({l, eta, sideband_ratio(l, eta)});
  }
  return rows;
}

std::vector<CarrierRow> carrier_comparison(const std::vector<double>& eta_grid) {
  std::vector<CarrierRow> rows;
  for (const double eta : eta_grid) {
    if (!(eta >= 0.0)) throw DomainError("carrier comparison needs eta >= 0");
    rows.push_back({eta, std::abs(harmonic_coupling_exact(0, 0, eta)),
                    std::abs(hardwall_coupling_exact(1, 1, eta))});
  }
  return rows;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_couplings(std::ostream& out, const CouplingMatrix& coupling, OutputFormat format) {
  const int n0 = coupling.trap.n_min();
  if (format == OutputFormat::Csv) {
    out << "n,n_prime,re,im\n";
    for (int i = 0; i < coupling.count(); ++i) {
      for (int j = 0; j < coupling.count(); ++j) {
        const Complex v = coupling.entries(i, j);
        out << n0 + i << ',' << n0 + j << ',' << format_number(v.real()) << ','
            << format_number(v.imag()) << '\n';
      }
    }
    return;
  }
  json rows = json::array();
  for (int i = 0; i < coupling.count(); ++i) {
    for (int j = 0; j < coupling.count(); ++j) {
      const Complex v = coupling.entries(i, j);
      rows.push_back({{"n", n0 + i}, {"n_prime", n0 + j}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  dump(out, json{{"trap", trap_name(coupling.trap)}, {"eta", coupling.eta}, {"entries", rows}});
}

void write_scan(std::ostream& out, const LevelTrack& track, OutputFormat format) {
  const int points = static_cast<int>(track.grid.size());
  if (format == OutputFormat::Csv) {
    out << "axis_value,branch_id,energy,tail_weight\n";
    for (int k = 0; k < points; ++k) {
      for (int b = 0; b < track.branches(); ++b) {
        out << format_number(track.grid[k]) << ',' << b << ','
            << format_number(track.branch_energy[b][k]) << ','
            << format_number(track.branch_tail[b][k]) << '\n';
      }
    }
    return;
  }
  json branches = json::array();
  for (int b = 0; b < track.branches(); ++b) {
    branches.push_back({{"branch_id", b},
                        {"energy", track.branch_energy[b]},
                        {"tail_weight", track.branch_tail[b]},
                        {"label_front", label_json(track.labels_front[b])},
                        {"label_back", label_json(track.labels_back[b])}});
  }
  dump(out, json{{"trap", trap_name(track.spec.trap)},
                 {"axis", track.spec.axis == ScanAxis::Detuning ? "detuning" : "rabi"},
                 {"drive", drive_json(track.spec.drive)},
                 {"n_trunc", track.spec.n_trunc},
                 {"grid", track.grid},
                 {"branches", branches}});
}

void write_crossings(std::ostream& out, const std::vector<AvoidedCrossing>& crossings,
                     OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "n,s,n2,s2,param_star,gap,predicted_general,predicted_leading,is_true_crossing\n";
    for (const auto& c : crossings) {
      out << c.label_a.n << ',' << c.label_a.sign << ',' << c.label_b.n << ',' << c.label_b.sign
          << ',' << format_number(c.param_star) << ',' << format_number(c.gap) << ',';
      if (c.predicted) {
        out << format_number(c.predicted->general) << ',' << format_number(c.predicted->leading);
      } else {
        out << ',';
      }
      out << ',' << (c.is_true_crossing ? 1 : 0) << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const auto& c : crossings) {
    json row{{"labels", json::array({label_json(c.label_a), label_json(c.label_b)})},
             {"branch_pair", json::array({c.branch_a, c.branch_b})},
             {"param_star", c.param_star},
             {"gap", c.gap},
             {"is_true_crossing", c.is_true_crossing},
             {"refined", c.refined}};
    if (c.predicted) {
      row["predicted"] = {{"general", c.predicted->general},
                          {"leading", c.predicted->leading},
                          {"isolation_ratio", c.predicted->isolation_ratio},
                          {"eta_scheme_ok", c.predicted->eta_scheme_ok}};
    } else {
      row["predicted"] = nullptr;
    }
    rows.push_back(row);
  }
  dump(out, json{{"crossings", rows}});
}

void write_resonances(std::ostream& out, const std::vector<ResonanceSpec>& specs,
                      OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "n,n_prime,k,radius,kind\n";
    for (const auto& r : specs) {
      out << r.n << ',' << r.n_prime << ',' << r.order << ',' << format_number(r.radius) << ','
          << kind_name(r.kind) << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const auto& r : specs) {
    rows.push_back({{"n", r.n},
                    {"n_prime", r.n_prime},
                    {"k", r.order},
                    {"radius", r.radius},
                    {"kind", kind_name(r.kind)}});
  }
  dump(out, json{{"resonances", rows}});
}

void write_splitting(std::ostream& out, const SplittingReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "n,n_prime,delta,omega_r,eta,weakfield,general,leading,isolation_ratio,isolated,"
           "eta_scheme_ok\n";
    out << report.n << ',' << report.n_prime << ',' << format_number(report.drive.delta) << ','
        << format_number(report.drive.omega_r) << ',' << format_number(report.drive.eta) << ','
        << format_number(report.weakfield) << ',' << format_number(report.prediction.general)
        << ',' << format_number(report.prediction.leading) << ','
        << format_number(report.isolation) << ',' << (report.isolated ? 1 : 0) << ','
        << (report.prediction.eta_scheme_ok ? 1 : 0) << '\n';
    return;
  }
  dump(out, json{{"trap", trap_name(report.trap)},
                 {"n", report.n},
                 {"n_prime", report.n_prime},
                 {"drive", drive_json(report.drive)},
                 {"weakfield", report.weakfield},
                 {"general", report.prediction.general},
                 {"leading", report.prediction.leading},
                 {"isolation_ratio", report.isolation},
                 {"isolated", report.isolated},
                 {"eta_scheme_ok", report.prediction.eta_scheme_ok}});
}

void write_dynamics(std::ostream& out, const EvolutionTrace& trace, OutputFormat format) {
  const auto cols = static_cast<int>(trace.times.size());
  if (format == OutputFormat::Csv) {
    out << "time,norm";
    for (const auto& label : trace.labels) out << ',' << label;
    out << '\n';
    for (int t = 0; t < cols; ++t) {
      out << format_number(trace.times[t]) << ',' << format_number(trace.norm_history[t]);
      for (int r = 0; r < trace.populations.rows(); ++r) {
        out << ',' << format_number(trace.populations(r, t));
      }
      out << '\n';
    }
    return;
  }
  json pops = json::object();
  for (int r = 0; r < trace.populations.rows(); ++r) {
    std::vector<double> row(trace.populations.row(r).begin(), trace.populations.row(r).end());
    pops[trace.labels[r]] = row;
  }
  dump(out, json{{"frame", trace.frame == Frame::Bare ? "bare" : "semidressed"},
                 {"times", trace.times},
                 {"norm", trace.norm_history},
                 {"populations", pops}});
}

void write_ratio_table(std::ostream& out, const std::vector<RatioRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "l,eta,log10_ratio\n";
    for (const auto& r : rows) {
      out << r.l << ',' << format_number(r.eta) << ',' << format_number(r.log10_ratio) << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"l", r.l}, {"eta", r.eta}, {"log10_ratio", r.log10_ratio}});
  }
  dump(out, json{{"ratios", arr}});
}

void write_carrier_table(std::ostream& out, const std::vector<CarrierRow>& rows,
                         OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "eta,harmonic,hardwall\n";
    for (const auto& r : rows) {
      out << format_number(r.eta) << ',' << format_number(r.harmonic) << ','
          << format_number(r.hardwall) << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"eta", r.eta}, {"harmonic", r.harmonic}, {"hardwall", r.hardwall}});
  }
  dump(out, json{{"carrier", arr}});
}

void write_convergence(std::ostream& out, const ConvergenceReport& report, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "n_from,n_to,max_drift\n";
    for (const auto& row : report.rows) {
      out << row.n_from << ',' << row.n_to << ',' << format_number(row.max_drift) << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n_from", row.n_from}, {"n_to", row.n_to}, {"max_drift", row.max_drift}});
  }
  json j{{"levels", report.levels}, {"drifts", rows}};
  j["recommended"] = report.recommended ? json(*report.recommended) : json(nullptr);
  dump(out, j);
}

}  // namespace vibronic
