#include "cli_app.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vibronic/dynamics.hpp"
#include "vibronic/errors.hpp"
#include "vibronic/report.hpp"

namespace vibronic::cli {

namespace {

struct GlobalOpts {
  std::string format = "csv";
  std::string out_path;
  bool quiet = false;

  OutputFormat fmt() const {
    return format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  }
};

TrapModel parse_trap(const std::string& name) {
  if (name == "harmonic") return harmonic_trap();
  if (name == "hardwall") return hardwall_trap();
  throw DomainError("unknown trap '" + name + "' (harmonic|hardwall)");
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) throw DomainError("range must be lo:hi");
  try {
    const double lo = std::stod(text.substr(0, sep));
    const double hi = std::stod(text.substr(sep + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw DomainError("range must be lo:hi with numeric bounds");
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DomainError("could not parse " + what + " from '" + text + "'");
  }
}

// Initial-state labels: bare "g0"/"e2", semidressed "0+"/"3-".
Eigen::VectorXcd parse_initial_state(const std::string& label, TrapModel trap,
                                     const DriveParams& drive, const BasisMap& basis) {
  if (label.empty()) throw DomainError("empty initial state label");
  if (label.front() == 'g' || label.front() == 'e') {
    const int n = parse_int(label.substr(1), "initial state quantum number");
    return basis_state(basis, label.front() == 'g' ? Internal::g : Internal::e, n);
  }
  if (label.back() == '+' || label.back() == '-') {
    const int n = parse_int(label.substr(0, label.size() - 1), "initial state quantum number");
    const SemidressedPair pair = semidressed_spectrum(trap, drive, n);
    return embed_semidressed(label.back() == '+' ? pair.plus : pair.minus, basis);
  }
  throw DomainError("initial state must be g<n>, e<n>, <n>+ or <n>-");
}

struct ScanArgs {
  std::string trap = "harmonic";
  std::string axis = "detuning";
  double delta = 0.0;
  double omega_r = 0.0;
  double eta = 0.0;
  std::string range;
  int steps = 500;
  int nmax = 40;

  ScanSpec to_spec() const {
    const auto [lo, hi] = parse_range(range);
    return {parse_trap(trap),
            DriveParams{omega_r, delta, eta},
            axis == "rabi" ? ScanAxis::Rabi : ScanAxis::Detuning,
            lo,
            hi,
            steps,
            nmax};
  }
};

void add_scan_options(CLI::App* cmd, ScanArgs& args) {
  cmd->add_option("--trap", args.trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
  cmd->add_option("--axis", args.axis)->check(CLI::IsMember({"detuning", "rabi"}));
  cmd->add_option("--delta", args.delta, "fixed detuning (ignored when axis=detuning)");
  cmd->add_option("--omega-r", args.omega_r, "fixed Rabi frequency (ignored when axis=rabi)");
  cmd->add_option("--eta", args.eta, "Lamb-Dicke parameter")->required();
  cmd->add_option("--range", args.range, "scan range lo:hi")->required();
  cmd->add_option("--steps", args.steps, "grid points");
  cmd->add_option("--nmax", args.nmax, "motional truncation N_trunc");
}

void report_scan_diagnostics(const LevelTrack& track, const GlobalOpts& global,
                             std::ostream& err) {
  if (global.quiet || track.tie_breaks.empty()) return;
  err << "note: " << track.tie_breaks.size()
      << " tracking tie(s) resolved by eigenvalue proximity\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dressed levels, couplings and Rabi-resonance avoided crossings of a "
               "laser-driven two-level ion in harmonic and hard-wall traps.\n"
               "All quantities are in trap natural units (hbar = 1; harmonic: omega_T = 1; "
               "hard wall: E_1 = 1)."};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out_path, "write data to PATH instead of stdout");
  app.add_flag("--quiet", global.quiet, "suppress diagnostics on the error stream");

  std::function<void(std::ostream&)> runner;

  // couplings
  {
    auto* cmd = app.add_subcommand("couplings", "coupling-strength table (divided by Omega_R)");
    cmd->fallthrough();
    auto trap = std::make_shared<std::string>("harmonic");
    auto eta = std::make_shared<double>(0.0);
    auto nmax = std::make_shared<int>(10);
    cmd->add_option("--trap", *trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
    cmd->add_option("--eta", *eta)->required();
    cmd->add_option("--nmax", *nmax, "largest quantum number in the table");
    cmd->callback([&runner, &global, trap, eta, nmax] {
      runner = [&global, trap, eta, nmax](std::ostream& os) {
        const TrapModel t = parse_trap(*trap);
        if (*eta < 0.0) throw DomainError("eta must be >= 0");
        const int count = *nmax - t.n_min() + 1;
        write_couplings(os, build_coupling_matrix(t, *eta, count), global.fmt());
      };
    });
  }

  // scan
  {
    auto* cmd = app.add_subcommand("scan", "dressed-level scan over detuning or Rabi frequency");
    cmd->fallthrough();
    auto args = std::make_shared<ScanArgs>();
    add_scan_options(cmd, *args);
    cmd->callback([&runner, &global, &err, args] {
      runner = [&global, &err, args](std::ostream& os) {
        const LevelTrack track = scan(args->to_spec());
        report_scan_diagnostics(track, global, err);
        write_scan(os, track, global.fmt());
      };
    });
  }

  // crossings
  {
    auto* cmd = app.add_subcommand("crossings", "locate and refine avoided crossings on a scan");
    cmd->fallthrough();
    auto args = std::make_shared<ScanArgs>();
    auto param_tol = std::make_shared<double>(1e-8);
    auto threshold = std::make_shared<double>(1e-9);
    add_scan_options(cmd, *args);
    cmd->add_option("--param-tol", *param_tol, "golden-section parameter tolerance");
    cmd->add_option("--threshold", *threshold, "true-crossing gap threshold");
    cmd->callback([&runner, &global, &err, args, param_tol, threshold] {
      runner = [&global, &err, args, param_tol, threshold](std::ostream& os) {
        const LevelTrack track = scan(args->to_spec());
        report_scan_diagnostics(track, global, err);
        const auto crossings = find_avoided_crossings(track, *param_tol, *threshold);
        int unrefined = 0;
        for (const auto& c : crossings) unrefined += c.refined ? 0 : 1;
        if (unrefined > 0 && !global.quiet) {
          err << "note: " << unrefined << " crossing(s) reported unrefined\n";
        }
        write_crossings(os, crossings, global.fmt());
      };
    });
  }

  // resonances
  {
    auto* cmd = app.add_subcommand("resonances", "enumerate Rabi-resonance loci");
    cmd->fallthrough();
    auto trap = std::make_shared<std::string>("harmonic");
    auto nmax = std::make_shared<int>(5);
    auto kmax = std::make_shared<int>(5);
    cmd->add_option("--trap", *trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
    cmd->add_option("--nmax", *nmax, "largest quantum number");
    cmd->add_option("--kmax", *kmax, "largest |n'-n|");
    cmd->callback([&runner, &global, trap, nmax, kmax] {
      runner = [&global, trap, nmax, kmax](std::ostream& os) {
        write_resonances(os, enumerate_resonances(parse_trap(*trap), *nmax, *kmax),
                         global.fmt());
      };
    });
  }

  // splitting
  {
    auto* cmd = app.add_subcommand("splitting", "weak-field and perturbative splitting at a "
                                                "resonance point");
    cmd->fallthrough();
    auto trap = std::make_shared<std::string>("harmonic");
    auto n = std::make_shared<int>(0);
    auto nprime = std::make_shared<int>(1);
    auto drive = std::make_shared<DriveParams>();
    cmd->add_option("--trap", *trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--nprime", *nprime)->required();
    cmd->add_option("--delta", drive->delta);
    cmd->add_option("--omega-r", drive->omega_r)->required();
    cmd->add_option("--eta", drive->eta)->required();
    cmd->callback([&runner, &global, trap, n, nprime, drive] {
      runner = [&global, trap, n, nprime, drive](std::ostream& os) {
        const TrapModel t = parse_trap(*trap);
        SplittingReport report{t, *n, *nprime, *drive, weakfield_splitting(t, *n, *nprime, *drive),
                               perturbative_splitting_general(t, *n, *nprime, *drive), false, 0.0};
        std::tie(report.isolated, report.isolation) = isolation_check(report.prediction, t);
        write_splitting(os, report, global.fmt());
      };
    });
  }

  // dynamics
  {
    auto* cmd = app.add_subcommand("dynamics", "unitary evolution of populations");
    cmd->fallthrough();
    auto trap = std::make_shared<std::string>("harmonic");
    auto drive = std::make_shared<DriveParams>();
    auto initial = std::make_shared<std::string>();
    auto t_final = std::make_shared<double>(0.0);
    auto steps = std::make_shared<int>(1000);
    auto frame = std::make_shared<std::string>("bare");
    auto nmax = std::make_shared<int>(40);
    cmd->add_option("--trap", *trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
    cmd->add_option("--delta", drive->delta);
    cmd->add_option("--omega-r", drive->omega_r)->required();
    cmd->add_option("--eta", drive->eta)->required();
    cmd->add_option("--initial", *initial, "initial state: g<n>, e<n>, <n>+ or <n>-")->required();
    cmd->add_option("--t-final", *t_final)->required();
    cmd->add_option("--steps", *steps);
    cmd->add_option("--frame", *frame)->check(CLI::IsMember({"bare", "semidressed"}));
    cmd->add_option("--nmax", *nmax, "motional truncation N_trunc");
    cmd->callback([&runner, &global, trap, drive, initial, t_final, steps, frame, nmax] {
      runner = [&global, trap, drive, initial, t_final, steps, frame, nmax](std::ostream& os) {
        const TrapModel t = parse_trap(*trap);
        const HamiltonianMatrix h = build_full_hamiltonian(t, *drive, *nmax);
        const Eigen::VectorXcd psi0 = parse_initial_state(*initial, t, *drive, h.basis);
        write_dynamics(os,
                       evolve(h, psi0, *t_final, *steps,
                              *frame == "semidressed" ? Frame::Semidressed : Frame::Bare),
                       global.fmt());
      };
    });
  }

  // compare
  {
    auto* cmd = app.add_subcommand("compare", "harmonic vs hard-wall coupling comparisons");
    cmd->fallthrough();
    auto figure = std::make_shared<std::string>();
    auto etas = std::make_shared<std::vector<double>>();
    auto lmax = std::make_shared<int>(5);
    cmd->add_option("--figure", *figure)->check(CLI::IsMember({"ratios", "carrier"}))->required();
    cmd->add_option("--eta", *etas, "Lamb-Dicke parameter list")->delimiter(',')->required();
    cmd->add_option("--lmax", *lmax, "largest sideband order (ratios)");
    cmd->callback([&runner, &global, figure, etas, lmax] {
      runner = [&global, figure, etas, lmax](std::ostream& os) {
        if (*figure == "carrier") {
          write_carrier_table(os, carrier_comparison(*etas), global.fmt());
          return;
        }
        std::vector<int> ls;
        for (int l = 1; l <= *lmax; ++l) ls.push_back(l);
        write_ratio_table(os, ratio_table(ls, *etas), global.fmt());
      };
    });
  }

  // converge
  {
    auto* cmd = app.add_subcommand("converge", "eigenvalue drift vs motional truncation");
    cmd->fallthrough();
    auto trap = std::make_shared<std::string>("harmonic");
    auto drive = std::make_shared<DriveParams>();
    auto nlist = std::make_shared<std::vector<int>>();
    auto levels = std::make_shared<int>(10);
    cmd->add_option("--trap", *trap)->check(CLI::IsMember({"harmonic", "hardwall"}));
    cmd->add_option("--delta", drive->delta);
    cmd->add_option("--omega-r", drive->omega_r);
    cmd->add_option("--eta", drive->eta)->required();
    cmd->add_option("--nlist", *nlist, "ascending truncation list")->delimiter(',')->required();
    cmd->add_option("--levels", *levels, "number of lowest eigenvalues to monitor");
    cmd->callback([&runner, &global, &err, trap, drive, nlist, levels] {
      runner = [&global, &err, trap, drive, nlist, levels](std::ostream& os) {
        const ConvergenceReport report =
            convergence_probe(parse_trap(*trap), *drive, *nlist, *levels);
        if (!global.quiet) {
          if (report.recommended) {
            err << "note: recommended N_trunc = " << *report.recommended << '\n';
          } else {
            err << "note: no truncation in the list reached drift < 1e-10\n";
          }
        }
        write_convergence(os, report, global.fmt());
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!global.out_path.empty()) {
      std::ofstream file(global.out_path);
      if (!file) throw DomainError("cannot open output file '" + global.out_path + "'");
      runner(file);
    } else {
      runner(out);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace vibronic::cli
