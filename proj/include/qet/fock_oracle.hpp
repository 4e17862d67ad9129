#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qet/crystal_modes.hpp"
#include "qet/qet_protocol.hpp"

// Brute-force validation path. Phonons live in a Fock space truncated per
// normal mode (basis = lexicographic product of mode occupations, dimension
// cutoff^N), where the Hamiltonian is diagonal and the ground state exact.
// Measurement and feedback operators are built as explicit matrices through
// the functional calculus of Hermitian eigendecompositions, so identities
// like cos^2 + sin^2 = 1 hold to roundoff even under truncation.

namespace qet {

struct FockBasisSpec {
  int n_ions = 2;
  int cutoff = 8;              // Fock levels kept per normal mode
  long max_dimension = 20000;  // ceiling on cutoff^n_ions
};

// cutoff^n_ions, overflow-checked. Throws resource_error above the ceiling
// and std::invalid_argument for cutoff < 2 or n_ions < 2.
long fock_dimension(const FockBasisSpec& basis);

struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

struct FockWorkspace {
  CrystalSpec spec;
  FockBasisSpec basis;
  Eigen::MatrixXd coupling;  // A, for the per-ion energy split

  std::vector<Eigen::MatrixXd> a_ops;    // annihilation per normal mode
  std::vector<Eigen::MatrixXcd> q_ops;   // site displacements (Hermitian)
  std::vector<Eigen::MatrixXcd> p_ops;   // site momenta (Hermitian)
  Eigen::VectorXd h_diag;                // H = sum_k nu sqrt(mu_k) a+_k a_k
  Eigen::VectorXcd ground;               // all modes in vacuum
  Eigen::VectorXi total_occupation;      // per basis state, for projections

  HermitianEigen q1_eig;  // gateway displacement eigensystem (measurement)
  HermitianEigen pn_eig;  // exit momentum eigensystem (feedback)

  // h_n = p_n^2/2m + (m nu^2/2)[A_nn q_n^2 + sum_{n'!=n} A_nn' {q_n,q_n'}/2];
  // per-ion energies subtract the ground-state expectation of each h_n.
  std::vector<Eigen::MatrixXcd> site_energy_ops;

  long dimension() const { return static_cast<long>(h_diag.size()); }
  Eigen::MatrixXcd hamiltonian() const;  // dense H, for callers that want it
};

FockWorkspace build_workspace(const CrystalSpec& spec, const ModeDecomposition& modes,
                              const FockBasisSpec& basis);

struct KrausPair {
  Eigen::MatrixXcd m_plus;   // cos(G_1)
  Eigen::MatrixXcd m_minus;  // sin(G_1)
};

// G_1 = phi + lambda_phys q_1 applied through the cached q_1 eigensystem.
KrausPair kraus_pair(const FockWorkspace& ws, const MeasurementParams& params);

// cos(2 G_1) as a matrix, same eigensystem.
Eigen::MatrixXcd cos_2g1(const FockWorkspace& ws, const MeasurementParams& params);

// exp(i alpha1 q_1)|g>: the coherent state the measurement pieces displace to.
Eigen::VectorXcd displaced_ground(const FockWorkspace& ws, double alpha1);

struct DensityState {
  Eigen::MatrixXcd rho;
};

enum class Feedback {
  conditioned,    // U_s = exp(i s theta p_N), s = measurement outcome
  unconditioned,  // same U = exp(i theta p_N) for both outcomes
};

struct OracleEnergies {
  double e_in = 0.0;
  double e_f = 0.0;
  double e_out = 0.0;
  DensityState rho_m;  // post-measurement average state
  DensityState rho_f;  // post-feedback average state
};

// Runs the protocol on the ground state: rho_M = sum_s M_s|g><g|M_s+,
// e_in = Tr[H rho_M], then the feedback kick and e_f = Tr[H rho_F].
// theta defaults to the closed-form optimum when params.theta is empty.
OracleEnergies simulate_protocol(const FockWorkspace& ws, const ModeDecomposition& modes,
                                 const MeasurementParams& params,
                                 Feedback feedback = Feedback::conditioned);

// m nu^2 sum_n A_Nn <g| q_n cos(2 G_1) |g>, the oracle-side eta.
double eta_oracle(const FockWorkspace& ws, const ModeDecomposition& modes,
                  const MeasurementParams& params);

// Free-evolves rho by t and returns the per-ion energies E_n relative to the
// ground state. The off-diagonal potential is split half-and-half between the
// two ions it couples, so sum_n E_n = Tr[H rho(t)].
Eigen::VectorXd local_energy_profile(const FockWorkspace& ws, const ModeDecomposition& modes,
                                     const DensityState& rho, double t);

}  // namespace qet
