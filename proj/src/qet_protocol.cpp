#include "qet/qet_protocol.hpp"

#include <cmath>

#include "qet/coherent_states.hpp"

namespace qet {

ProtocolEnergies protocol_energies(const CrystalSpec& spec, const ModeDecomposition& modes,
                                   const MeasurementParams& params) {
  validate(spec);
  if (modes.n_ions() != spec.n_ions) {
    throw std::invalid_argument("protocol_energies: modes were built for a different N");
  }
  if (!std::isfinite(params.phi) || !std::isfinite(params.lam) ||
      (params.theta && !std::isfinite(*params.theta))) {
    throw std::invalid_argument("protocol_energies: parameters must be finite");
  }

  const int last = spec.n_ions - 1;
  const double m = spec.mass;
  const double nu = spec.trap_frequency;
  const double lam_phys = params.lam * std::sqrt(m * nu);

  const double exit_coupling = modes.delta.row(0).dot(modes.coupling.col(last));
  const double damping = std::exp(-lam_phys * lam_phys * modes.delta(0, 0) / (m * nu));

  ProtocolEnergies out;
  out.e_in = lam_phys * lam_phys / (2.0 * m);
  out.eta = -lam_phys * nu * std::sin(2.0 * params.phi) * damping * exit_coupling;
  out.xi = 0.5 * m * nu * nu * modes.coupling(last, last);
  out.theta_star = out.eta / (2.0 * out.xi);
  out.gamma_n = exit_coupling * exit_coupling / modes.coupling(last, last);
  out.zeta_n = 4.0 * modes.delta(0, 0);

  if (params.theta) {
    out.theta = *params.theta;
    out.e_f = out.e_in - out.theta * out.eta + out.theta * out.theta * out.xi;
    out.e_out = out.e_in - out.e_f;
  } else {
    out.theta = out.theta_star;
    out.e_out = out.eta * out.eta / (4.0 * out.xi);
    out.e_f = out.e_in - out.e_out;
  }
  return out;
}

double eta_via_coherent_states(const CrystalSpec& spec, const ModeDecomposition& modes,
                               const MeasurementParams& params) {
  validate(spec);
  if (modes.n_ions() != spec.n_ions) {
    throw std::invalid_argument("eta_via_coherent_states: modes were built for a different N");
  }
  const int last = spec.n_ions - 1;
  const double m = spec.mass;
  const double nu = spec.trap_frequency;

  double eta = 0.0;
  for (int n = 0; n < spec.n_ions; ++n) {
    eta += m * nu * nu * modes.coupling(last, n) *
           ground_q_cos_2g1(n, params.lam, params.phi, modes, m, nu).real();
  }
  return eta;
}

double n2_closed_form(double m, double nu, double lam, double phi) {
  if (!(m > 0.0) || !(nu > 0.0)) {
    throw std::invalid_argument("n2_closed_form: m and nu must be positive");
  }
  const double lam_phys_sq = lam * lam * m * nu;
  const double sin_2phi = std::sin(2.0 * phi);
  const double root3 = std::sqrt(3.0);
  return (2.0 - root3) / 4.0 * (lam_phys_sq / (2.0 * m)) * sin_2phi * sin_2phi *
         std::exp(-(1.0 + 1.0 / root3) * lam_phys_sq / (m * nu));
}

double energy_in_joules(double energy_natural, double nu_rad_per_s) {
  if (!(nu_rad_per_s > 0.0)) {
    throw std::invalid_argument("energy_in_joules: nu must be positive");
  }
  constexpr double kHbar = 1.054571817e-34;  // J s
  return energy_natural * kHbar * nu_rad_per_s;
}

}  // namespace qet
