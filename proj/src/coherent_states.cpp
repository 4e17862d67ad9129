#include "qet/coherent_states.hpp"

#include <cmath>
#include <string>

namespace qet {

namespace {

void check_params(const CoherentParams& c, Eigen::Index n, const char* who) {
  if (c.alpha.size() != n || c.beta.size() != n) {
    throw std::invalid_argument(std::string(who) + ": parameter length mismatch");
  }
  if (!c.alpha.allFinite() || !c.beta.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": parameters must be finite");
  }
}

}  // namespace

std::complex<double> coherent_overlap(const CoherentParams& c1, const CoherentParams& c2,
                                      const ModeDecomposition& modes, double m, double nu) {
  const Eigen::Index n = modes.eigenvalues.size();
  check_params(c1, n, "coherent_overlap");
  check_params(c2, n, "coherent_overlap");

  const double phase = 0.5 * (c1.alpha.dot(c2.beta) - c1.beta.dot(c2.alpha));

  const Eigen::MatrixXd& b = modes.eigenvectors;
  const Eigen::ArrayXd da = (b.transpose() * (c1.alpha - c2.alpha)).array();
  const Eigen::ArrayXd db = (b.transpose() * (c1.beta - c2.beta)).array();
  const Eigen::ArrayXd stiffness = m * nu * modes.eigenvalues.array().sqrt();

  const double gauss = -0.25 * (da.square() / stiffness + stiffness * db.square()).sum();
  return std::exp(std::complex<double>(gauss, phase));
}

std::complex<double> ground_q_matrix_element(int site, double lam, int sign,
                                             const ModeDecomposition& modes, double m,
                                             double nu) {
  const Eigen::Index n = modes.eigenvalues.size();
  if (site < 0 || site >= n) {
    throw std::invalid_argument("ground_q_matrix_element: site index out of range");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("ground_q_matrix_element: sign must be +1 or -1");
  }
  const double lam_phys = lam * std::sqrt(m * nu);
  const double damping = std::exp(-lam_phys * lam_phys * modes.delta(0, 0) / (m * nu));
  const double magnitude = (lam_phys / (m * nu)) * damping * modes.delta(0, site);
  return std::complex<double>(0.0, sign * magnitude);
}

std::complex<double> ground_q_cos_2g1(int site, double lam, double phi,
                                      const ModeDecomposition& modes, double m, double nu) {
  const std::complex<double> plus = ground_q_matrix_element(site, lam, +1, modes, m, nu);
  const std::complex<double> minus = ground_q_matrix_element(site, lam, -1, modes, m, nu);
  const std::complex<double> rot = std::exp(std::complex<double>(0.0, 2.0 * phi));
  return 0.5 * rot * plus + 0.5 * std::conj(rot) * minus;
}

}  // namespace qet
