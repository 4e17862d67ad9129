#pragma once

#include <Eigen/Dense>

#include "qet/errors.hpp"

// Equilibrium geometry and phonon mode structure of a linear ion crystal:
// N ions in a harmonic axial trap, coupled by Coulomb repulsion. Positions
// are handled in the dimensionless form u_n = x_n / l with the scale length
// l = (Z^2 e^2 / (m nu^2))^(1/3); the crystal itself is then parameter-free.

namespace qet {

struct CrystalSpec {
  int n_ions = 2;
  double mass = 1.0;            // m, natural units
  double trap_frequency = 1.0;  // nu, natural units
};

// Throws std::invalid_argument unless n_ions >= 2, mass > 0, trap_frequency > 0.
void validate(const CrystalSpec& spec);

struct EquilibriumConfig {
  Eigen::VectorXd u;     // dimensionless positions, strictly increasing
  double residual = 0.0; // max-norm of the force balance at u
};

struct ModeDecomposition {
  Eigen::MatrixXd coupling;     // A, real symmetric
  Eigen::VectorXd eigenvalues;  // mu_k, ascending (mu_1 = 1, mu_2 = 3)
  Eigen::MatrixXd eigenvectors; // column k = b^(k), orthonormal
  Eigen::MatrixXd delta;        // Delta = sum_k mu_k^(-1/2) b^(k) b^(k)T

  int n_ions() const { return static_cast<int>(eigenvalues.size()); }
};

// Force balance of the dimensionless equilibrium equation:
//   u_n - sum_{n'<n} (u_n - u_n')^-2 + sum_{n'>n} (u_n - u_n')^-2
Eigen::VectorXd equilibrium_force(const Eigen::VectorXd& u);

// Coupling matrix at positions u:
//   A_nn  = 1 + 2 sum_{n''!=n} |u_n - u_n''|^-3
//   A_nn' = -2 |u_n - u_n'|^-3            (n != n')
// Also the Jacobian of equilibrium_force, which is what the solver uses.
Eigen::MatrixXd coupling_matrix(const Eigen::VectorXd& u);

// Damped Newton iteration on equilibrium_force, seeded with uniform spacing 2.
// Converges to max-norm residual <= 1e-12 or throws solver_error.
EquilibriumConfig solve_equilibrium(const CrystalSpec& spec);

// Eigen-decomposes the coupling matrix. Eigenvalues sorted ascending;
// each eigenvector's largest-magnitude component made positive (first index
// wins ties). Throws degeneracy_error on eigenvalue gaps below 1e-8 and
// numerical_error on a non-positive eigenvalue.
ModeDecomposition build_mode_decomposition(const EquilibriumConfig& eq);

struct WMatrices {
  Eigen::MatrixXd w1;  // sum_k cos(nu sqrt(mu_k) t) b b
  Eigen::MatrixXd w2;  // sum_k mu_k^(-1/2) sin(nu sqrt(mu_k) t) b b
  Eigen::MatrixXd w3;  // sum_k mu_k^(+1/2) sin(nu sqrt(mu_k) t) b b
};

// Heisenberg-evolution kernels: q(t) = W1 q + W2 p/(m nu), p(t) = -m nu W3 q + W1 p.
WMatrices w_matrices(const ModeDecomposition& modes, double nu, double t);

// Dimensional helper l = (Z^2 e^2 / (m nu^2))^(1/3); physical positions are l*u_n.
double scale_length(int charge_number, double charge_unit, double mass, double nu);

}  // namespace qet
