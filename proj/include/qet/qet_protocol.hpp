#pragma once

#include <optional>

#include "qet/crystal_modes.hpp"

// Closed-form energies of the teleportation protocol: a POVM measurement
// G_1 = phi + lambda q_1 on the gateway ion injects E_in, the 1-bit outcome s
// travels classically, and the outcome-conditioned kick U_s = exp(i s theta p_N)
// on the exit ion extracts E_out. Everything below is an exact expression in
// the mode data (A, Delta); the truncated-Fock oracle cross-checks each one.

namespace qet {

struct MeasurementParams {
  double phi = 0.0;                 // offset in G_1, radians
  double lam = 0.0;                 // coupling, in units of sqrt(m nu)
  std::optional<double> theta{};    // feedback amplitude; empty selects theta*
};

struct ProtocolEnergies {
  double e_in = 0.0;        // lambda_phys^2 / (2m), injected by the measurement
  double eta = 0.0;         // linear feedback coefficient
  double xi = 0.0;          // quadratic feedback coefficient, (m nu^2 / 2) A_NN
  double theta_star = 0.0;  // eta / (2 xi), minimiser of e_f(theta)
  double theta = 0.0;       // feedback amplitude actually used
  double e_f = 0.0;         // crystal energy after feedback
  double e_out = 0.0;       // energy extracted at the exit ion, e_in - e_f
  double gamma_n = 0.0;     // |sum_n Delta_1n A_nN|^2 / A_NN
  double zeta_n = 0.0;      // 4 Delta_11
};

// Evaluates every protocol quantity for one (phi, lambda, theta) setting.
// With theta unset, e_f = e_in - eta^2/(4 xi) at the optimum; otherwise
// e_f = e_in - theta eta + theta^2 xi.
ProtocolEnergies protocol_energies(const CrystalSpec& spec, const ModeDecomposition& modes,
                                   const MeasurementParams& params);

// eta recomputed through the coherent-state route,
// m nu^2 sum_n A_Nn <g| q_n cos(2 G_1) |g>, as an independent cross-check.
double eta_via_coherent_states(const CrystalSpec& spec, const ModeDecomposition& modes,
                               const MeasurementParams& params);

// The exact N=2 output energy,
//   (2 - sqrt 3)/4 * (lambda_phys^2 / 2m) * sin^2(2 phi) *
//   exp[-(1 + 1/sqrt 3) lambda_phys^2 / (m nu)].
double n2_closed_form(double m, double nu, double lam, double phi);

// Energies above are in units of hbar*nu when computed with trap_frequency = 1;
// this converts such a value to joules for a trap at nu_rad_per_s.
double energy_in_joules(double energy_natural, double nu_rad_per_s);

}  // namespace qet
