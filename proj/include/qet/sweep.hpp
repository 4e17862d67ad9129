#pragma once

#include <vector>

#include "qet/crystal_modes.hpp"

// N-sweep of the teleportation coefficients: E_out = gamma_N E_in
// exp(-zeta_N E_in / nu) sin^2(2 phi), one row per crystal size, plus an
// ordinary least-squares line through (N, ln gamma_N).

namespace qet {

struct SweepRow {
  int n = 0;
  double gamma = 0.0;
  double ln_gamma = 0.0;
  double zeta = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;      // sorted by n ascending
  double fit_slope = 0.0;          // OLS on (n, ln gamma_n)
  double fit_intercept = 0.0;
  double fit_r_squared = 1.0;      // 1 when fewer than two rows
};

// Solves the crystal for every N in [n_min, n_max] and fills one row each.
// A solver failure is rethrown as solver_error naming the failing N.
SweepResult sweep_gamma_zeta(int n_min, int n_max);

}  // namespace qet
