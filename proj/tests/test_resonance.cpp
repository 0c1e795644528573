#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "vibronic/errors.hpp"
#include "vibronic/resonance.hpp"

using namespace vibronic;

namespace {

bool contains_pair(const std::vector<ResonanceSpec>& specs, int n, int np, double radius) {
  return std::any_of(specs.begin(), specs.end(), [&](const ResonanceSpec& r) {
    return r.n == n && r.n_prime == np && r.radius == radius;
  });
}

}  // namespace

TEST_CASE("resonance enumeration") {
  const auto h = enumerate_resonances(harmonic_trap(), 2, 1);
  CHECK(contains_pair(h, 0, 1, 1.0));
  CHECK(contains_pair(h, 1, 2, 1.0));
  CHECK(contains_pair(h, 0, 0, 0.0));
  CHECK(contains_pair(h, 2, 2, 0.0));
  CHECK(h.size() == 5);  // 3 carriers + 2 first sidebands

  const auto w = enumerate_resonances(hardwall_trap(), 3, 99);
  CHECK(contains_pair(w, 1, 2, 3.0));
  CHECK(contains_pair(w, 2, 3, 5.0));
  CHECK(contains_pair(w, 1, 3, 8.0));
  CHECK(w.size() == 6);  // 3 carriers + 3 pairs

  // Radii are sorted and equal the motional energy differences exactly.
  for (TrapModel trap : {harmonic_trap(), hardwall_trap()}) {
    const auto all = enumerate_resonances(trap, trap.n_min() + 6, 4);
    double prev = -1.0;
    for (const auto& r : all) {
      CHECK(r.radius >= prev);
      prev = r.radius;
      CHECK(r.radius == motional_energy(trap, r.n_prime) - motional_energy(trap, r.n));
      CHECK(r.order == r.n_prime - r.n);
      CHECK((r.kind == ResonanceKind::Carrier) == (r.order == 0));
    }
  }
  CHECK_THROWS_AS(enumerate_resonances(harmonic_trap(), 3, 0), DomainError);
}

TEST_CASE("resonance point classification") {
  const ResonanceSpec spec{harmonic_trap(), 0, 1, 1, 1.0, ResonanceKind::Generalized};
  CHECK(classify_resonance_point(spec, 1.0, 0.0) == ResonanceKind::Blue);
  CHECK(classify_resonance_point(spec, -1.0, 0.0) == ResonanceKind::Red);
  CHECK(classify_resonance_point(spec, 0.0, 1.0) == ResonanceKind::Generalized);
  CHECK(classify_resonance_point(spec, 0.6, 0.8) == ResonanceKind::Generalized);
  const ResonanceSpec carrier{harmonic_trap(), 1, 1, 0, 0.0, ResonanceKind::Carrier};
  CHECK(classify_resonance_point(carrier, 0.0, 0.5) == ResonanceKind::Carrier);
}

TEST_CASE("weak-field splitting") {
  // Carrier: omega_r e^{-eta^2/2} L_n(eta^2).
  const double eta = 0.3;
  const double x = eta * eta;
  CHECK(weakfield_splitting(harmonic_trap(), 0, 0, {0.2, 0.0, eta}) ==
        doctest::Approx(0.2 * std::exp(-0.5 * x)).epsilon(1e-13));
  CHECK(weakfield_splitting(harmonic_trap(), 1, 1, {0.2, 0.0, eta}) ==
        doctest::Approx(0.2 * std::exp(-0.5 * x) * (1.0 - x)).epsilon(1e-13));
  // First blue sideband (oracle-frozen coupling magnitude).
  CHECK(weakfield_splitting(harmonic_trap(), 0, 1, {0.01, 1.0, 0.1}) ==
        doctest::Approx(9.950124791926823e-4).epsilon(1e-13));
  // No motional coupling at eta = 0.
  CHECK(weakfield_splitting(harmonic_trap(), 0, 1, {0.01, 1.0, 0.0}) == 0.0);
}

TEST_CASE("perturbative splitting at the first resonance") {
  const SplittingPrediction p =
      perturbative_splitting_general(harmonic_trap(), 0, 1, {1.0, 0.0, 0.1});
  CHECK(p.leading == doctest::Approx(0.1).epsilon(1e-15));  // eta omega_T
  CHECK(p.general == doctest::Approx(0.09962554684083501).epsilon(1e-12));
  CHECK(p.eta_scheme_ok);
  CHECK(p.isolation_ratio == p.general);

  // Delta epsilon_{n,n+1} = eta omega_r sqrt(n+1).
  for (int n : {0, 1, 2}) {
    const SplittingPrediction q =
        perturbative_splitting_general(harmonic_trap(), n, n + 1, {1.0, 0.0, 0.1});
    CHECK(q.leading == doctest::Approx(0.1 * std::sqrt(n + 1.0)).epsilon(1e-12));
  }

  // Even transfer at delta = 0: leading factor delta/Omega kills the splitting.
  CHECK(perturbative_splitting_general(harmonic_trap(), 0, 2, {2.0, 0.0, 0.1}).leading == 0.0);

  CHECK_THROWS_AS(perturbative_splitting_general(harmonic_trap(), 0, 1, {0.0, 0.0, 0.1}),
                  DomainError);
}

TEST_CASE("hard-wall leading splitting formula") {
  // (1,2) at delta = 0, Omega_R = radius = 3: 4*3*1*2/(1*9) * (2 eta/pi).
  const double eta = 0.1;
  const SplittingPrediction p =
      perturbative_splitting_general(hardwall_trap(), 1, 2, {3.0, 0.0, eta});
  CHECK(p.leading ==
        doctest::Approx(4.0 * 3.0 * 2.0 / 9.0 * (2.0 * eta / std::numbers::pi)).epsilon(1e-13));
  CHECK(p.neighbor_gap == 2.0);  // nearest other radius is 5
}

TEST_CASE("leading vs general converges at order eta^2") {
  struct Point {
    TrapModel trap;
    int n, np;
    double radius;
  };
  const Point points[] = {{harmonic_trap(), 0, 1, 1.0},
                          {harmonic_trap(), 1, 2, 1.0},
                          {hardwall_trap(), 1, 2, 3.0}};
  for (const auto& pt : points) {
    std::vector<double> logs_eta, logs_err;
    for (double eta : {0.2, 0.1, 0.05, 0.025}) {
      const SplittingPrediction p =
          perturbative_splitting_general(pt.trap, pt.n, pt.np, {pt.radius, 0.0, eta});
      logs_eta.push_back(std::log(eta));
      logs_err.push_back(std::log(std::abs(p.general - p.leading) / p.leading));
    }
    // Least-squares slope of log(err) vs log(eta).
    double mx = 0, my = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(logs_eta.size());
    for (std::size_t i = 0; i < logs_eta.size(); ++i) {
      mx += logs_eta[i];
      my += logs_err[i];
    }
    mx /= m;
    my /= m;
    for (std::size_t i = 0; i < logs_eta.size(); ++i) {
      sxx += (logs_eta[i] - mx) * (logs_eta[i] - mx);
      sxy += (logs_eta[i] - mx) * (logs_err[i] - my);
    }
    const double slope = sxy / sxx;
    CHECK(slope > 1.7);
    CHECK(slope < 2.3);
  }
}

TEST_CASE("weak-field limit recovery on the k=1 locus") {
  // Omega = radius with omega_r/delta = 0.05.
  for (TrapModel trap : {harmonic_trap(), hardwall_trap()}) {
    const int n = trap.n_min();
    const double radius = motional_energy(trap, n + 1) - motional_energy(trap, n);
    const double delta = radius / std::sqrt(1.0 + 0.05 * 0.05);
    const DriveParams d{0.05 * delta, delta, 0.1};
    const double general = perturbative_splitting_general(trap, n, n + 1, d).general;
    const double weak = weakfield_splitting(trap, n, n + 1, d);
    CHECK(std::abs(general - weak) / weak < 0.05);
  }
}

TEST_CASE("isolation criterion") {
  // eta = 0.01 first resonance: ratio ~ 0.01, isolated.
  const SplittingPrediction first =
      perturbative_splitting_general(harmonic_trap(), 0, 1, {1.0, 0.0, 0.01});
  const auto [iso1, ratio1] = isolation_check(first, harmonic_trap());
  CHECK(iso1);
  CHECK(ratio1 == doctest::Approx(0.01).epsilon(0.01));

  // Carrier at omega_r = 0.5 omega_T: ratio ~ 0.5, not isolated; eta scheme flagged off.
  const SplittingPrediction carrier =
      perturbative_splitting_general(harmonic_trap(), 1, 1, {0.5, 0.0, 0.1});
  CHECK(!carrier.eta_scheme_ok);
  const auto [iso2, ratio2] = isolation_check(carrier, harmonic_trap());
  CHECK(!iso2);
  CHECK(ratio2 > 0.45);
  CHECK(ratio2 <= 0.5);

  // Hard-wall (1,2): spacing to the nearest resonance radius is 2.
  const SplittingPrediction hw =
      perturbative_splitting_general(hardwall_trap(), 1, 2, {3.0, 0.0, 0.1});
  const auto [iso3, ratio3] = isolation_check(hw, hardwall_trap());
  CHECK(ratio3 == doctest::Approx(hw.general / 2.0).epsilon(1e-15));
  CHECK(iso3);
}
