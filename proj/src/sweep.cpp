#include "qet/sweep.hpp"

#include <cmath>
#include <string>

namespace qet {

SweepResult sweep_gamma_zeta(int n_min, int n_max) {
  if (n_min < 2 || n_min > n_max || n_max > 12) {
    throw std::invalid_argument("sweep_gamma_zeta: need 2 <= n_min <= n_max <= 12");
  }

  SweepResult result;
  result.rows.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) {
    try {
      const CrystalSpec spec{n, 1.0, 1.0};
      const ModeDecomposition modes = build_mode_decomposition(solve_equilibrium(spec));
      const int last = n - 1;
      const double exit_coupling = modes.delta.row(0).dot(modes.coupling.col(last));
      const double gamma = exit_coupling * exit_coupling / modes.coupling(last, last);
      result.rows.push_back(SweepRow{n, gamma, std::log(gamma), 4.0 * modes.delta(0, 0)});
    } catch (const solver_error& err) {
      throw solver_error("sweep_gamma_zeta: equilibrium failed at N=" + std::to_string(n) +
                             ": " + err.what(),
                         err.residual());
    }
  }

  const auto count = static_cast<double>(result.rows.size());
  if (result.rows.size() < 2) {
    result.fit_slope = 0.0;
    result.fit_intercept = result.rows.empty() ? 0.0 : result.rows.front().ln_gamma;
    result.fit_r_squared = 1.0;
    return result;
  }

  double mean_n = 0.0, mean_y = 0.0;
  for (const SweepRow& row : result.rows) {
    mean_n += row.n;
    mean_y += row.ln_gamma;
  }
  mean_n /= count;
  mean_y /= count;

  double cov = 0.0, var_n = 0.0, var_y = 0.0;
  for (const SweepRow& row : result.rows) {
    cov += (row.n - mean_n) * (row.ln_gamma - mean_y);
    var_n += (row.n - mean_n) * (row.n - mean_n);
    var_y += (row.ln_gamma - mean_y) * (row.ln_gamma - mean_y);
  }
  result.fit_slope = cov / var_n;
  result.fit_intercept = mean_y - result.fit_slope * mean_n;

  double ss_res = 0.0;
  for (const SweepRow& row : result.rows) {
    const double fit = result.fit_slope * row.n + result.fit_intercept;
    ss_res += (row.ln_gamma - fit) * (row.ln_gamma - fit);
  }
  result.fit_r_squared = var_y > 0.0 ? 1.0 - ss_res / var_y : 1.0;
  return result;
}

}  // namespace qet
