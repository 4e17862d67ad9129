#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qet/oracle_compare.hpp"
#include "qet/sweep.hpp"

using namespace qet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sweep: single-size range reproduces the exact N=2 coefficients") {
  const SweepResult result = sweep_gamma_zeta(2, 2);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].n == 2);
  CHECK(std::abs(result.rows[0].gamma - (2.0 - std::sqrt(3.0)) / 4.0) <= 1e-12);
  CHECK(std::abs(result.rows[0].zeta - (2.0 + 2.0 / std::sqrt(3.0))) <= 1e-12);
  CHECK(result.rows[0].ln_gamma == doctest::Approx(std::log(result.rows[0].gamma)));
}

TEST_CASE("sweep: rows are complete, ordered and internally consistent") {
  const SweepResult result = sweep_gamma_zeta(2, 10);
  REQUIRE(result.rows.size() == 9);
  for (int i = 0; i < 9; ++i) {
    CHECK(result.rows[i].n == i + 2);
    CHECK(result.rows[i].gamma > 0.0);
    CHECK(result.rows[i].zeta > 0.0);
    CHECK(std::abs(result.rows[i].ln_gamma - std::log(result.rows[i].gamma)) <= 1e-14);
    if (i > 0) CHECK(result.rows[i].gamma < result.rows[i - 1].gamma);
  }

  // Recompute the least-squares line here as a cross-check of the fit fields.
  double mean_n = 0.0, mean_y = 0.0;
  for (const SweepRow& row : result.rows) {
    mean_n += row.n;
    mean_y += row.ln_gamma;
  }
  mean_n /= 9.0;
  mean_y /= 9.0;
  double cov = 0.0, var = 0.0;
  for (const SweepRow& row : result.rows) {
    cov += (row.n - mean_n) * (row.ln_gamma - mean_y);
    var += (row.n - mean_n) * (row.n - mean_n);
  }
  CHECK(std::abs(result.fit_slope - cov / var) <= 1e-12);
  CHECK(std::abs(result.fit_intercept - (mean_y - result.fit_slope * mean_n)) <= 1e-12);
  CHECK(result.fit_r_squared > 0.0);
  CHECK(result.fit_r_squared <= 1.0);

  // Computed decay rate of ln gamma_N over N = 2..10 (the curve is convex,
  // so the least-squares slope is shallower than the early-N decay).
  CHECK(std::abs(result.fit_slope - (-0.84004543444610)) <= 1e-9);
  CHECK(std::abs(result.fit_r_squared - 0.90462918911) <= 1e-8);

  // zeta varies mildly across the range.
  double zeta_min = result.rows[0].zeta, zeta_max = result.rows[0].zeta;
  for (const SweepRow& row : result.rows) {
    zeta_min = std::min(zeta_min, row.zeta);
    zeta_max = std::max(zeta_max, row.zeta);
  }
  CHECK(zeta_max / zeta_min < 2.0);
}

TEST_CASE("sweep: invalid ranges are rejected") {
  CHECK_THROWS_AS(sweep_gamma_zeta(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep_gamma_zeta(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(sweep_gamma_zeta(2, 13), std::invalid_argument);
}

TEST_CASE("oracle comparison: N=2 cross-check passes at the default tolerance") {
  const OracleComparison cmp = compare_oracle(2, 14, 0.3, kPi / 4.0);
  CHECK(cmp.pass);
  REQUIRE(cmp.rows.size() == 9);  // 6 fixed metrics + 2 ions + bound
  for (const ComparisonRow& row : cmp.rows) {
    CHECK(row.pass);
  }

  // Named metrics land where expected.
  CHECK(cmp.rows[0].metric == "e_in");
  CHECK(std::abs(cmp.rows[0].analytic - 0.045) <= 1e-14);
  CHECK(cmp.rows[0].abs_residual <= 1e-4);
  CHECK(cmp.rows[4].metric == "kraus_completeness");
  CHECK(cmp.rows[4].oracle <= 1e-10);
  CHECK(cmp.rows[6].metric == "local_e_1");
  CHECK(std::abs(cmp.rows[6].oracle - 0.045) <= 1e-4);
  CHECK(cmp.rows.back().metric == "e_out_le_e_in");
}

TEST_CASE("oracle comparison: zero coupling is exactly idle") {
  const OracleComparison cmp = compare_oracle(2, 8, 0.0, 0.9);
  CHECK(cmp.pass);
  for (const ComparisonRow& row : cmp.rows) {
    if (row.metric == "e_in" || row.metric == "e_f" || row.metric == "e_out") {
      CHECK(std::abs(row.analytic) <= 1e-14);
      CHECK(std::abs(row.oracle) <= 1e-12);
    }
  }
}

TEST_CASE("oracle comparison: N=3 locality rows") {
  const OracleComparison cmp = compare_oracle(3, 8, 0.3, kPi / 4.0);
  CHECK(cmp.pass);
  for (const ComparisonRow& row : cmp.rows) {
    if (row.metric == "local_e_1") {
      CHECK(std::abs(row.oracle - 0.045) <= 1e-4);
    } else if (row.metric == "local_e_2" || row.metric == "local_e_3") {
      CHECK(std::abs(row.oracle) <= 1e-4);
    }
  }
}

TEST_CASE("oracle comparison: off-optimal feedback still matches") {
  const ProtocolEnergies closed = protocol_energies(
      CrystalSpec{2, 1, 1},
      build_mode_decomposition(solve_equilibrium(CrystalSpec{2, 1, 1})),
      {kPi / 4.0, 0.3, {}});
  const OracleComparison cmp =
      compare_oracle(2, 12, 0.3, kPi / 4.0, closed.theta_star * 1.5);
  CHECK(cmp.pass);
  CHECK(std::abs(cmp.theta - closed.theta_star * 1.5) <= 1e-15);
}

TEST_CASE("oracle comparison: domain and resource guards") {
  CHECK_THROWS_AS(compare_oracle(5, 8, 0.3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(compare_oracle(2, 8, 0.3, 0.1, std::nullopt, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(compare_oracle(4, 12, 0.3, 0.1), resource_error);
}
