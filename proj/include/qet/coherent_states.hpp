#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qet/crystal_modes.hpp"

// Closed-form coherent-state algebra for the phonon modes. A state is kept as
// its displacement parameters (alpha, beta) of U(alpha, beta) =
// exp[i sum_n (alpha_n q_n - beta_n p_n)] acting on the ground state; every
// inner product the protocol needs then has a closed form in the mode
// amplitudes A_k = sum_n b_n^(k) alpha_n, B_k = sum_n b_n^(k) beta_n.

namespace qet {

struct CoherentParams {
  Eigen::VectorXd alpha;
  Eigen::VectorXd beta;
};

// <(alpha,beta)|(alpha',beta')>: a phase exp[(i/2) sum_n (alpha_n beta'_n -
// beta_n alpha'_n)] times Gaussian damping in the mode-amplitude differences.
std::complex<double> coherent_overlap(const CoherentParams& c1, const CoherentParams& c2,
                                      const ModeDecomposition& modes, double m, double nu);

// <g| q_site |±2 lambda>, the ground-state matrix element of the site
// displacement against the measurement-displaced state e^{±2 i lambda q_1}|g>:
//   ± i (lambda_phys / (m nu)) exp[-lambda_phys^2 Delta_11 / (m nu)] Delta_{1,site}
// `site` is 0-based; `lam` is the coupling in units of sqrt(m nu); `sign` is ±1.
std::complex<double> ground_q_matrix_element(int site, double lam, int sign,
                                             const ModeDecomposition& modes, double m,
                                             double nu);

// <g| q_site cos(2 G_1) |g> assembled from the two displaced matrix elements,
//   (1/2) e^{2 i phi} <g|q|+2 lambda> + (1/2) e^{-2 i phi} <g|q|-2 lambda>,
// which is real and equals -(lambda_phys sin 2phi / (m nu)) e^{-lambda_phys^2
// Delta_11/(m nu)} Delta_{1,site}.
std::complex<double> ground_q_cos_2g1(int site, double lam, double phi,
                                      const ModeDecomposition& modes, double m, double nu);

}  // namespace qet
