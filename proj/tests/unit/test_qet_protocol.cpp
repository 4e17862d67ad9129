#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qet/qet_protocol.hpp"

using namespace qet;

namespace {

constexpr double kPi = std::numbers::pi;

ModeDecomposition modes_for(int n) {
  return build_mode_decomposition(solve_equilibrium(CrystalSpec{n, 1.0, 1.0}));
}

}  // namespace

TEST_CASE("protocol energies: degenerate parameter points") {
  const CrystalSpec spec{2, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(2);

  const ProtocolEnergies off = protocol_energies(spec, modes, {0.7, 0.0, {}});
  CHECK(off.e_in == 0.0);
  CHECK(off.eta == 0.0);
  CHECK(off.e_out == 0.0);

  // sin(2 phi) kills eta at multiples of pi/2.
  const ProtocolEnergies aligned = protocol_energies(spec, modes, {0.0, 0.4, {}});
  CHECK(aligned.eta == 0.0);
  CHECK(aligned.theta_star == 0.0);
  CHECK(aligned.e_out == 0.0);
  const ProtocolEnergies quarter = protocol_energies(spec, modes, {kPi / 2.0, 0.4, {}});
  CHECK(std::abs(quarter.eta) <= 1e-15);
  CHECK(quarter.e_out <= 1e-30);
}

TEST_CASE("protocol energies: frozen N=2 point and gamma/zeta anchors") {
  const CrystalSpec spec{2, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(2);
  const ProtocolEnergies run = protocol_energies(spec, modes, {kPi / 4.0, 0.3, {}});

  CHECK(run.e_in == doctest::Approx(0.045).epsilon(1e-14));
  CHECK(run.xi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(run.e_out - 2.6154827996654893e-3) <= 1e-14);
  CHECK(std::abs(run.gamma_n - (2.0 - std::sqrt(3.0)) / 4.0) <= 1e-12);
  CHECK(std::abs(run.zeta_n - (2.0 + 2.0 / std::sqrt(3.0))) <= 1e-12);
  CHECK(run.theta == run.theta_star);
}

TEST_CASE("protocol energies: conservation, bounds and parabola in theta") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> lam_dist(0.05, 1.5);
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
  std::uniform_real_distribution<double> theta_scale(-3.0, 3.0);

  for (const int n : {2, 3, 6}) {
    const CrystalSpec spec{n, 1.0, 1.0};
    const ModeDecomposition modes = modes_for(n);
    for (int trial = 0; trial < 40; ++trial) {
      const double lam = lam_dist(rng);
      const double phi = phi_dist(rng);
      const ProtocolEnergies best = protocol_energies(spec, modes, {phi, lam, {}});

      CHECK(std::abs(best.e_f + best.e_out - best.e_in) <= 1e-12);
      CHECK(best.e_out >= 0.0);
      CHECK(best.e_out <= best.e_in);
      CHECK(best.e_f >= 0.0);
      CHECK(best.xi > 0.0);
      CHECK(std::abs(best.e_out - best.eta * best.eta / (4.0 * best.xi)) <= 1e-15);

      // Consistency with e_out = gamma e_in exp(-zeta e_in / nu) sin^2(2 phi).
      const double via_coefficients = best.gamma_n * best.e_in *
                                      std::exp(-best.zeta_n * best.e_in) *
                                      std::sin(2.0 * phi) * std::sin(2.0 * phi);
      CHECK(std::abs(best.e_out - via_coefficients) <=
            1e-12 * std::max(best.e_out, 1e-30));

      // Any fixed theta keeps e_f on the upward parabola, above the optimum.
      const double theta = best.theta_star * theta_scale(rng);
      const ProtocolEnergies fixed = protocol_energies(spec, modes, {phi, lam, theta});
      CHECK(fixed.e_f >= 0.0);
      CHECK(fixed.e_f + 1e-15 >= best.e_f);
      CHECK(std::abs(fixed.e_f - (best.e_in - theta * best.eta + theta * theta * best.xi)) <=
            1e-14);
    }
  }
}

TEST_CASE("protocol energies: quadratic minimum sits at theta*") {
  const CrystalSpec spec{3, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(3);
  const MeasurementParams params{kPi / 3.0, 0.45, {}};
  const ProtocolEnergies best = protocol_energies(spec, modes, params);
  for (const double delta : {1e-3, 1e-2, 0.1}) {
    for (const int side : {-1, +1}) {
      const ProtocolEnergies shifted = protocol_energies(
          spec, modes, {params.phi, params.lam, best.theta_star + side * delta});
      CHECK(shifted.e_f > best.e_f);
    }
  }
}

TEST_CASE("protocol energies: output peaks at e_in = nu / zeta_N") {
  const CrystalSpec spec{2, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(2);

  double best_e_in = 0.0, best_e_out = -1.0, zeta = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double lam = 2.5 * i / 400.0;
    const ProtocolEnergies run = protocol_energies(spec, modes, {kPi / 4.0, lam, {}});
    zeta = run.zeta_n;
    if (run.e_out > best_e_out) {
      best_e_out = run.e_out;
      best_e_in = run.e_in;
    }
  }
  // Interior maximum, located at e_in = 1/zeta up to the grid spacing.
  CHECK(std::abs(best_e_in - 1.0 / zeta) <= 5e-3);
}

TEST_CASE("eta agrees with the coherent-state route") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> lam_dist(0.0, 1.2);
  std::uniform_real_distribution<double> phi_dist(-kPi, kPi);
  for (const int n : {2, 4}) {
    const CrystalSpec spec{n, 1.0, 1.0};
    const ModeDecomposition modes = modes_for(n);
    for (int trial = 0; trial < 30; ++trial) {
      const MeasurementParams params{phi_dist(rng), lam_dist(rng), {}};
      const double closed = protocol_energies(spec, modes, params).eta;
      const double via_states = eta_via_coherent_states(spec, modes, params);
      CHECK(std::abs(closed - via_states) <= 1e-12);
    }
  }
}

TEST_CASE("n2 closed form: identity with the general formula") {
  const CrystalSpec spec{2, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(2);

  CHECK(n2_closed_form(1.0, 1.0, 0.0, 0.9) == 0.0);

  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double lam = 2.0 * i / 19.0;
      const double phi = kPi * j / 19.0;
      const double general = protocol_energies(spec, modes, {phi, lam, {}}).e_out;
      const double closed = n2_closed_form(1.0, 1.0, lam, phi);
      CHECK(std::abs(general - closed) <=
            1e-12 * std::max({std::abs(general), std::abs(closed), 1e-30}));
    }
  }

  // phi = ±pi/4 maximises the output at fixed lambda.
  const double peak = n2_closed_form(1.0, 1.0, 0.5, kPi / 4.0);
  CHECK(std::abs(n2_closed_form(1.0, 1.0, 0.5, -kPi / 4.0) - peak) <= 1e-15);
  for (int j = 0; j <= 40; ++j) {
    CHECK(n2_closed_form(1.0, 1.0, 0.5, kPi * j / 40.0) <= peak + 1e-15);
  }

  CHECK_THROWS_AS(n2_closed_form(0.0, 1.0, 0.3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(n2_closed_form(1.0, -2.0, 0.3, 0.1), std::invalid_argument);
}

TEST_CASE("protocol energies: invariant under lambda -> -lambda with phi -> -phi") {
  const CrystalSpec spec{3, 1.0, 1.0};
  const ModeDecomposition modes = modes_for(3);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(0.05, 1.2);
  for (int trial = 0; trial < 20; ++trial) {
    const double lam = dist(rng);
    const double phi = dist(rng);
    const ProtocolEnergies fwd = protocol_energies(spec, modes, {phi, lam, {}});
    const ProtocolEnergies rev = protocol_energies(spec, modes, {-phi, -lam, {}});
    CHECK(std::abs(fwd.eta - rev.eta) <= 1e-15);
    CHECK(std::abs(fwd.e_out - rev.e_out) <= 1e-15);
    CHECK(std::abs(fwd.theta_star - rev.theta_star) <= 1e-15);
  }
}

TEST_CASE("dimensional inputs: energies scale with nu, coefficients do not") {
  const ModeDecomposition modes = modes_for(2);
  const MeasurementParams params{0.6, 0.35, {}};

  const ProtocolEnergies natural = protocol_energies({2, 1.0, 1.0}, modes, params);
  const double mass = 2.0, nu = 3.0;
  const ProtocolEnergies physical = protocol_energies({2, mass, nu}, modes, params);

  CHECK(std::abs(physical.e_in - nu * natural.e_in) <= 1e-12);
  CHECK(std::abs(physical.e_out - nu * natural.e_out) <= 1e-12);
  CHECK(std::abs(physical.gamma_n - natural.gamma_n) <= 1e-14);
  CHECK(std::abs(physical.zeta_n - natural.zeta_n) <= 1e-14);
  CHECK(std::abs(physical.theta_star - natural.theta_star / std::sqrt(mass * nu)) <= 1e-14);
}

TEST_CASE("protocol energies: input validation") {
  const ModeDecomposition modes2 = modes_for(2);
  CHECK_THROWS_AS(protocol_energies({3, 1.0, 1.0}, modes2, {0.1, 0.1, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(protocol_energies({2, 1.0, 1.0}, modes2,
                                    {std::numeric_limits<double>::quiet_NaN(), 0.1, {}}),
                  std::invalid_argument);
}

TEST_CASE("energy reporting helper") {
  // One unit of energy at nu = 2 pi x 1 MHz.
  const double joules = energy_in_joules(1.0, 2.0 * kPi * 1.0e6);
  CHECK(joules == doctest::Approx(6.62607015e-28).epsilon(1e-6));
  CHECK_THROWS_AS(energy_in_joules(1.0, 0.0), std::invalid_argument);
}
