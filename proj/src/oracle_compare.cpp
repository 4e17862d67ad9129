#include "qet/oracle_compare.hpp"

#include <algorithm>
#include <cmath>

namespace qet {

namespace {

ComparisonRow make_row(std::string metric, double analytic, double oracle, double tol) {
  ComparisonRow row;
  row.metric = std::move(metric);
  row.analytic = analytic;
  row.oracle = oracle;
  row.abs_residual = std::abs(oracle - analytic);
  row.rel_residual = row.abs_residual / std::max(std::abs(analytic), 1.0);
  row.pass = row.abs_residual <= tol;
  return row;
}

}  // namespace

OracleComparison compare_oracle(int n, int cutoff, double lam, double phi,
                                std::optional<double> theta, double tol) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("compare_oracle: n must be 2, 3 or 4");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("compare_oracle: tol must be positive");
  }

  const CrystalSpec spec{n, 1.0, 1.0};
  const ModeDecomposition modes = build_mode_decomposition(solve_equilibrium(spec));
  const MeasurementParams params{phi, lam, theta};
  const ProtocolEnergies analytic = protocol_energies(spec, modes, params);

  const FockWorkspace ws = build_workspace(spec, modes, FockBasisSpec{n, cutoff});
  const OracleEnergies oracle = simulate_protocol(ws, modes, params);

  OracleComparison cmp;
  cmp.n_ions = n;
  cmp.cutoff = cutoff;
  cmp.lam = lam;
  cmp.phi = phi;
  cmp.theta = analytic.theta;
  cmp.tol = tol;

  cmp.rows.push_back(make_row("e_in", analytic.e_in, oracle.e_in, tol));
  cmp.rows.push_back(make_row("e_f", analytic.e_f, oracle.e_f, tol));
  cmp.rows.push_back(make_row("e_out", analytic.e_out, oracle.e_out, tol));
  cmp.rows.push_back(make_row("eta", analytic.eta, eta_oracle(ws, modes, params), tol));

  const KrausPair kraus = kraus_pair(ws, params);
  const long dim = ws.dimension();
  const double completeness =
      (kraus.m_plus.adjoint() * kraus.m_plus + kraus.m_minus.adjoint() * kraus.m_minus -
       Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  cmp.rows.push_back(make_row("kraus_completeness", 0.0, completeness, tol));

  const double outcome_identity =
      (kraus.m_plus.adjoint() * kraus.m_plus - kraus.m_minus.adjoint() * kraus.m_minus -
       cos_2g1(ws, params))
          .cwiseAbs()
          .maxCoeff();
  cmp.rows.push_back(make_row("cos_2g1_identity", 0.0, outcome_identity, tol));

  // Post-measurement per-ion energies at t=0: all of e_in sits on the gateway.
  const Eigen::VectorXd local = local_energy_profile(ws, modes, oracle.rho_m, 0.0);
  for (int site = 0; site < n; ++site) {
    const double expected = site == 0 ? analytic.e_in : 0.0;
    cmp.rows.push_back(
        make_row("local_e_" + std::to_string(site + 1), expected, local[site], tol));
  }

  ComparisonRow bound;
  bound.metric = "e_out_le_e_in";
  bound.analytic = oracle.e_in;
  bound.oracle = oracle.e_out;
  bound.abs_residual = std::max(0.0, oracle.e_out - oracle.e_in);
  bound.rel_residual = bound.abs_residual / std::max(std::abs(oracle.e_in), 1.0);
  bound.pass = bound.abs_residual <= 1e-12;
  cmp.rows.push_back(bound);

  cmp.pass = std::all_of(cmp.rows.begin(), cmp.rows.end(),
                         [](const ComparisonRow& row) { return row.pass; });
  return cmp;
}

}  // namespace qet
