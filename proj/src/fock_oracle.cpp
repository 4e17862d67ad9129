#include "qet/fock_oracle.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace qet {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

// V f(w) V+ for a cached Hermitian eigensystem.
Eigen::MatrixXcd apply_spectral(const HermitianEigen& eig, const Eigen::ArrayXd& fw) {
  return eig.vectors * fw.matrix().asDiagonal() * eig.vectors.adjoint();
}

// V f(w) V+ |v> without forming the matrix.
Eigen::VectorXcd apply_spectral_vec(const HermitianEigen& eig, const Eigen::ArrayXcd& fw,
                                    const Eigen::VectorXcd& v) {
  return eig.vectors * (fw * (eig.vectors.adjoint() * v).array()).matrix();
}

double physical_lambda(const CrystalSpec& spec, const MeasurementParams& params) {
  return params.lam * std::sqrt(spec.mass * spec.trap_frequency);
}

double ground_energy(const FockWorkspace& ws, const Eigen::VectorXcd& state) {
  return (state.array().abs2() * ws.h_diag.array()).sum();
}

}  // namespace

long fock_dimension(const FockBasisSpec& basis) {
  if (basis.n_ions < 2) {
    throw std::invalid_argument("FockBasisSpec: n_ions must be >= 2");
  }
  if (basis.cutoff < 2) {
    throw std::invalid_argument("FockBasisSpec: cutoff must be >= 2");
  }
  long dim = 1;
  for (int k = 0; k < basis.n_ions; ++k) {
    if (dim > basis.max_dimension / basis.cutoff) {
      throw resource_error("FockBasisSpec: dimension " + std::to_string(basis.cutoff) + "^" +
                           std::to_string(basis.n_ions) + " exceeds ceiling " +
                           std::to_string(basis.max_dimension));
    }
    dim *= basis.cutoff;
  }
  return dim;
}

Eigen::MatrixXcd FockWorkspace::hamiltonian() const {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(h_diag.size(), h_diag.size());
  h.diagonal() = h_diag.cast<Complex>();
  return h;
}

FockWorkspace build_workspace(const CrystalSpec& spec, const ModeDecomposition& modes,
                              const FockBasisSpec& basis) {
  validate(spec);
  if (modes.n_ions() != spec.n_ions || basis.n_ions != spec.n_ions) {
    throw std::invalid_argument("build_workspace: inconsistent ion counts");
  }
  const long dim = fock_dimension(basis);
  const int n = spec.n_ions;
  const int cutoff = basis.cutoff;
  const double m = spec.mass;
  const double nu = spec.trap_frequency;

  FockWorkspace ws;
  ws.spec = spec;
  ws.basis = basis;
  ws.coupling = modes.coupling;

  // Mode k occupies stride cutoff^(n-1-k); mode 0 is the most significant digit.
  std::vector<long> stride(n);
  stride[n - 1] = 1;
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * cutoff;
  const auto occupation = [&](long idx, int k) {
    return static_cast<int>((idx / stride[k]) % cutoff);
  };

  ws.a_ops.assign(n, Eigen::MatrixXd::Zero(dim, dim));
  for (int k = 0; k < n; ++k) {
    for (long idx = 0; idx < dim; ++idx) {
      const int occ = occupation(idx, k);
      if (occ > 0) ws.a_ops[k](idx - stride[k], idx) = std::sqrt(static_cast<double>(occ));
    }
  }

  ws.h_diag.resize(dim);
  ws.total_occupation.resize(dim);
  for (long idx = 0; idx < dim; ++idx) {
    double energy = 0.0;
    int total = 0;
    for (int k = 0; k < n; ++k) {
      const int occ = occupation(idx, k);
      energy += nu * std::sqrt(modes.eigenvalues[k]) * occ;
      total += occ;
    }
    ws.h_diag[idx] = energy;
    ws.total_occupation[idx] = total;
  }

  ws.ground = Eigen::VectorXcd::Zero(dim);
  ws.ground[0] = 1.0;

  // q_n = sum_k b_n^(k) i (a_k - a_k+) / sqrt(2 m nu sqrt(mu_k)),
  // p_n = sum_k b_n^(k) sqrt(m nu sqrt(mu_k) / 2) (a_k + a_k+).
  ws.q_ops.assign(n, Eigen::MatrixXcd::Zero(dim, dim));
  ws.p_ops.assign(n, Eigen::MatrixXcd::Zero(dim, dim));
  for (int k = 0; k < n; ++k) {
    const double stiffness = m * nu * std::sqrt(modes.eigenvalues[k]);
    const Eigen::MatrixXd& lowering = ws.a_ops[k];
    const Eigen::MatrixXd minus = lowering - lowering.transpose();
    const Eigen::MatrixXd plus = lowering + lowering.transpose();
    for (int site = 0; site < n; ++site) {
      const double b = modes.eigenvectors(site, k);
      ws.q_ops[site] += (kI * b / std::sqrt(2.0 * stiffness)) * minus;
      ws.p_ops[site] += Complex(b * std::sqrt(0.5 * stiffness), 0.0) * plus;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> q1_solver(ws.q_ops[0]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> pn_solver(ws.p_ops[n - 1]);
  if (q1_solver.info() != Eigen::Success || pn_solver.info() != Eigen::Success) {
    throw numerical_error("build_workspace: eigensolver failed");
  }
  ws.q1_eig = HermitianEigen{q1_solver.eigenvalues(), q1_solver.eigenvectors()};
  ws.pn_eig = HermitianEigen{pn_solver.eigenvalues(), pn_solver.eigenvectors()};

  ws.site_energy_ops.reserve(n);
  for (int site = 0; site < n; ++site) {
    Eigen::MatrixXcd h = ws.p_ops[site] * ws.p_ops[site] / (2.0 * m);
    h += (0.5 * m * nu * nu * modes.coupling(site, site)) * ws.q_ops[site] * ws.q_ops[site];
    for (int other = 0; other < n; ++other) {
      if (other == site) continue;
      h += (0.25 * m * nu * nu * modes.coupling(site, other)) *
           (ws.q_ops[site] * ws.q_ops[other] + ws.q_ops[other] * ws.q_ops[site]);
    }
    ws.site_energy_ops.push_back(std::move(h));
  }

  return ws;
}

KrausPair kraus_pair(const FockWorkspace& ws, const MeasurementParams& params) {
  const Eigen::ArrayXd g1 =
      params.phi + physical_lambda(ws.spec, params) * ws.q1_eig.values.array();
  return KrausPair{apply_spectral(ws.q1_eig, g1.cos()), apply_spectral(ws.q1_eig, g1.sin())};
}

Eigen::MatrixXcd cos_2g1(const FockWorkspace& ws, const MeasurementParams& params) {
  const Eigen::ArrayXd g1 =
      params.phi + physical_lambda(ws.spec, params) * ws.q1_eig.values.array();
  return apply_spectral(ws.q1_eig, (2.0 * g1).cos());
}

Eigen::VectorXcd displaced_ground(const FockWorkspace& ws, double alpha1) {
  const Eigen::ArrayXcd phases = (kI * alpha1 * ws.q1_eig.values.array()).exp();
  return apply_spectral_vec(ws.q1_eig, phases, ws.ground);
}

OracleEnergies simulate_protocol(const FockWorkspace& ws, const ModeDecomposition& modes,
                                 const MeasurementParams& params, Feedback feedback) {
  if (modes.n_ions() != ws.spec.n_ions) {
    throw std::invalid_argument("simulate_protocol: inconsistent ion counts");
  }
  const double theta =
      params.theta ? *params.theta : protocol_energies(ws.spec, modes, params).theta_star;

  const KrausPair kraus = kraus_pair(ws, params);
  const Eigen::VectorXcd branch_plus = kraus.m_plus * ws.ground;
  const Eigen::VectorXcd branch_minus = kraus.m_minus * ws.ground;

  OracleEnergies out;
  out.e_in = ground_energy(ws, branch_plus) + ground_energy(ws, branch_minus);

  const Eigen::ArrayXcd kick_plus = (kI * theta * ws.pn_eig.values.array()).exp();
  const Eigen::ArrayXcd kick_minus =
      feedback == Feedback::conditioned ? kick_plus.conjugate() : kick_plus;
  const Eigen::VectorXcd final_plus = apply_spectral_vec(ws.pn_eig, kick_plus, branch_plus);
  const Eigen::VectorXcd final_minus = apply_spectral_vec(ws.pn_eig, kick_minus, branch_minus);
  out.e_f = ground_energy(ws, final_plus) + ground_energy(ws, final_minus);
  out.e_out = out.e_in - out.e_f;

  out.rho_m.rho = branch_plus * branch_plus.adjoint() + branch_minus * branch_minus.adjoint();
  out.rho_f.rho = final_plus * final_plus.adjoint() + final_minus * final_minus.adjoint();
  return out;
}

double eta_oracle(const FockWorkspace& ws, const ModeDecomposition& modes,
                  const MeasurementParams& params) {
  if (modes.n_ions() != ws.spec.n_ions) {
    throw std::invalid_argument("eta_oracle: inconsistent ion counts");
  }
  const int n = ws.spec.n_ions;
  const double m = ws.spec.mass;
  const double nu = ws.spec.trap_frequency;
  const Eigen::ArrayXd g1 =
      params.phi + physical_lambda(ws.spec, params) * ws.q1_eig.values.array();
  const Eigen::VectorXcd cos_state =
      apply_spectral_vec(ws.q1_eig, (2.0 * g1).cos().cast<Complex>(), ws.ground);

  double eta = 0.0;
  for (int site = 0; site < n; ++site) {
    const Complex element = ws.ground.dot(ws.q_ops[site] * cos_state);
    eta += m * nu * nu * modes.coupling(n - 1, site) * element.real();
  }
  return eta;
}

Eigen::VectorXd local_energy_profile(const FockWorkspace& ws, const ModeDecomposition& modes,
                                     const DensityState& rho, double t) {
  if (modes.n_ions() != ws.spec.n_ions) {
    throw std::invalid_argument("local_energy_profile: inconsistent ion counts");
  }
  if (rho.rho.rows() != ws.dimension() || rho.rho.cols() != ws.dimension()) {
    throw std::invalid_argument("local_energy_profile: density matrix dimension mismatch");
  }
  if (!(t >= 0.0)) {
    throw std::invalid_argument("local_energy_profile: t must be non-negative");
  }

  // H is diagonal here, so free evolution is an elementwise phase.
  const Eigen::VectorXcd phases = (-kI * t * ws.h_diag.array()).exp();
  const Eigen::MatrixXcd evolved =
      phases.asDiagonal() * rho.rho * phases.conjugate().asDiagonal();

  const int n = ws.spec.n_ions;
  Eigen::VectorXd energies(n);
  for (int site = 0; site < n; ++site) {
    const Eigen::MatrixXcd& h_site = ws.site_energy_ops[site];
    const Complex trace = (evolved.transpose().cwiseProduct(h_site)).sum();
    energies[site] = trace.real() - h_site(0, 0).real();
  }
  return energies;
}

}  // namespace qet
