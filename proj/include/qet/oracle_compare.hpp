#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qet/fock_oracle.hpp"

// Side-by-side run of the closed forms and the truncated-Fock oracle for one
// parameter point, with a pass/fail verdict per quantity.

namespace qet {

struct ComparisonRow {
  std::string metric;
  double analytic = 0.0;
  double oracle = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
};

struct OracleComparison {
  int n_ions = 0;
  int cutoff = 0;
  double lam = 0.0;
  double phi = 0.0;
  double theta = 0.0;   // the value actually used (theta* when not given)
  double tol = 1e-4;
  std::vector<ComparisonRow> rows;
  bool pass = false;    // all rows passed
};

// Runs the full cross-check at N in {2,3,4}: energies against the closed
// forms, Kraus completeness and the cos(2 G_1) identity, eta, the per-ion
// energies of rho_M at t=0, and the e_out <= e_in bound.
OracleComparison compare_oracle(int n, int cutoff, double lam, double phi,
                                std::optional<double> theta = std::nullopt,
                                double tol = 1e-4);

}  // namespace qet
