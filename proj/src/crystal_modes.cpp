#include "qet/crystal_modes.hpp"

#include <cmath>
#include <string>

namespace qet {

namespace {

constexpr double kResidualTarget = 1e-12;
constexpr int kMaxIterations = 200;
constexpr double kDegeneracyGap = 1e-8;

bool strictly_increasing(const Eigen::VectorXd& u) {
  for (Eigen::Index n = 0; n + 1 < u.size(); ++n) {
    if (!(u[n] < u[n + 1])) return false;
  }
  return true;
}

}  // namespace

void validate(const CrystalSpec& spec) {
  if (spec.n_ions < 2) {
    throw std::invalid_argument("CrystalSpec: n_ions must be >= 2, got " +
                                std::to_string(spec.n_ions));
  }
  if (!(spec.mass > 0.0) || !(spec.trap_frequency > 0.0)) {
    throw std::invalid_argument("CrystalSpec: mass and trap_frequency must be positive");
  }
}

Eigen::VectorXd equilibrium_force(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size();
  Eigen::VectorXd f = u;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      f[i] -= 1.0 / ((u[i] - u[j]) * (u[i] - u[j]));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      f[i] += 1.0 / ((u[i] - u[j]) * (u[i] - u[j]));
    }
  }
  return f;
}

Eigen::MatrixXd coupling_matrix(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double inv_cubed = 1.0 / std::pow(std::abs(u[i] - u[j]), 3);
      a(i, i) += 2.0 * inv_cubed;
      a(i, j) = -2.0 * inv_cubed;
    }
  }
  return a;
}

EquilibriumConfig solve_equilibrium(const CrystalSpec& spec) {
  validate(spec);
  const int n = spec.n_ions;

  Eigen::VectorXd u(n);
  for (int i = 0; i < n; ++i) {
    u[i] = 2.0 * (i + 1 - 0.5 * (n + 1));
  }

  Eigen::VectorXd force = equilibrium_force(u);
  double residual = force.cwiseAbs().maxCoeff();

  for (int iter = 0; iter < kMaxIterations && residual > kResidualTarget; ++iter) {
    const Eigen::MatrixXd jac = coupling_matrix(u);
    const Eigen::VectorXd step = jac.ldlt().solve(force);

    // Backtrack until the residual drops and the ordering survives.
    double damping = 1.0;
    bool accepted = false;
    while (damping >= 1.0 / 1024.0) {
      const Eigen::VectorXd candidate = u - damping * step;
      if (strictly_increasing(candidate)) {
        const Eigen::VectorXd cand_force = equilibrium_force(candidate);
        const double cand_residual = cand_force.cwiseAbs().maxCoeff();
        if (cand_residual < residual) {
          u = candidate;
          force = cand_force;
          residual = cand_residual;
          accepted = true;
          break;
        }
      }
      damping *= 0.5;
    }
    if (!accepted) {
      throw solver_error("solve_equilibrium: no descent step found at N=" +
                             std::to_string(n),
                         residual);
    }
  }

  if (residual > kResidualTarget) {
    throw solver_error("solve_equilibrium: not converged after " +
                           std::to_string(kMaxIterations) + " iterations at N=" +
                           std::to_string(n),
                       residual);
  }
  return EquilibriumConfig{u, residual};
}

ModeDecomposition build_mode_decomposition(const EquilibriumConfig& eq) {
  if (eq.u.size() < 2 || !strictly_increasing(eq.u)) {
    throw std::invalid_argument(
        "build_mode_decomposition: positions must be strictly increasing, length >= 2");
  }

  ModeDecomposition modes;
  modes.coupling = coupling_matrix(eq.u);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(modes.coupling);
  if (solver.info() != Eigen::Success) {
    throw numerical_error("build_mode_decomposition: eigensolver failed");
  }
  modes.eigenvalues = solver.eigenvalues();
  modes.eigenvectors = solver.eigenvectors();

  const Eigen::Index n = modes.eigenvalues.size();
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (modes.eigenvalues[k + 1] - modes.eigenvalues[k] < kDegeneracyGap) {
      throw degeneracy_error("build_mode_decomposition: eigenvalue gap below 1e-8 between modes " +
                             std::to_string(k + 1) + " and " + std::to_string(k + 2));
    }
  }
  if (modes.eigenvalues[0] <= 0.0) {
    throw numerical_error("build_mode_decomposition: non-positive eigenvalue " +
                          std::to_string(modes.eigenvalues[0]));
  }

  // Largest-magnitude component positive; first index wins ties.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index arg_max = 0;
    modes.eigenvectors.col(k).cwiseAbs().maxCoeff(&arg_max);
    if (modes.eigenvectors(arg_max, k) < 0.0) {
      modes.eigenvectors.col(k) = -modes.eigenvectors.col(k);
    }
  }

  modes.delta = modes.eigenvectors *
                modes.eigenvalues.array().rsqrt().matrix().asDiagonal() *
                modes.eigenvectors.transpose();
  return modes;
}

WMatrices w_matrices(const ModeDecomposition& modes, double nu, double t) {
  const Eigen::ArrayXd root_mu = modes.eigenvalues.array().sqrt();
  const Eigen::ArrayXd phase = nu * root_mu * t;
  const Eigen::MatrixXd& b = modes.eigenvectors;

  WMatrices w;
  w.w1 = b * phase.cos().matrix().asDiagonal() * b.transpose();
  w.w2 = b * (phase.sin() / root_mu).matrix().asDiagonal() * b.transpose();
  w.w3 = b * (phase.sin() * root_mu).matrix().asDiagonal() * b.transpose();
  return w;
}

double scale_length(int charge_number, double charge_unit, double mass, double nu) {
  if (charge_number <= 0 || !(charge_unit > 0.0) || !(mass > 0.0) || !(nu > 0.0)) {
    throw std::invalid_argument("scale_length: all inputs must be positive");
  }
  const double z_e = static_cast<double>(charge_number) * charge_unit;
  return std::cbrt(z_e * z_e / (mass * nu * nu));
}

}  // namespace qet
