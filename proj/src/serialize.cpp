#include "qet/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace qet {

namespace {

using nlohmann::json;
constexpr const char* kCrlf = "\r\n";

json sweep_row_json(const SweepRow& row) {
  return json{{"n", row.n},
              {"gamma", row.gamma},
              {"ln_gamma", row.ln_gamma},
              {"zeta", row.zeta}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string format_value(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

std::string modes_csv(const EquilibriumConfig& eq, const ModeDecomposition& modes) {
  const int n = modes.n_ions();
  std::string out = "name,i,j,value";
  out += kCrlf;
  const auto scalar_rows = [&](const char* name, const Eigen::VectorXd& values) {
    for (int i = 0; i < n; ++i) {
      out += name;
      out += "," + std::to_string(i + 1) + ",," + format_value(values[i]) + kCrlf;
    }
  };
  scalar_rows("u", eq.u);
  scalar_rows("mu", modes.eigenvalues);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      out += "b," + std::to_string(i + 1) + "," + std::to_string(k + 1) + "," +
             format_value(modes.eigenvectors(i, k)) + kCrlf;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += "delta," + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
             format_value(modes.delta(i, j)) + kCrlf;
    }
  }
  return out;
}

std::string modes_json(const CrystalSpec& spec, const EquilibriumConfig& eq,
                       const ModeDecomposition& modes) {
  const int n = modes.n_ions();
  json rows = json::array();
  for (int i = 0; i < n; ++i) rows.push_back({{"name", "u"}, {"i", i + 1}, {"value", eq.u[i]}});
  for (int k = 0; k < n; ++k)
    rows.push_back({{"name", "mu"}, {"i", k + 1}, {"value", modes.eigenvalues[k]}});
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      rows.push_back(
          {{"name", "b"}, {"i", i + 1}, {"j", k + 1}, {"value", modes.eigenvectors(i, k)}});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows.push_back(
          {{"name", "delta"}, {"i", i + 1}, {"j", j + 1}, {"value", modes.delta(i, j)}});
    }
  }
  const json doc{{"meta",
                  {{"command", "modes"},
                   {"n", spec.n_ions},
                   {"residual", eq.residual}}},
                 {"rows", rows}};
  return dump(doc);
}

std::string protocol_csv(const CrystalSpec& spec, const MeasurementParams& params,
                         const ProtocolEnergies& energies) {
  std::string out =
      "n,lambda,phi,theta,e_in,eta,xi,theta_star,e_f,e_out,gamma_n,zeta_n";
  out += kCrlf;
  out += std::to_string(spec.n_ions) + "," + format_value(params.lam) + "," +
         format_value(params.phi) + "," + format_value(energies.theta) + "," +
         format_value(energies.e_in) + "," + format_value(energies.eta) + "," +
         format_value(energies.xi) + "," + format_value(energies.theta_star) + "," +
         format_value(energies.e_f) + "," + format_value(energies.e_out) + "," +
         format_value(energies.gamma_n) + "," + format_value(energies.zeta_n) + kCrlf;
  return out;
}

std::string protocol_json(const CrystalSpec& spec, const MeasurementParams& params,
                          const ProtocolEnergies& energies) {
  const json doc{
      {"meta",
       {{"command", "protocol"},
        {"n", spec.n_ions},
        {"lambda", params.lam},
        {"phi", params.phi}}},
      {"rows",
       json::array({{{"theta", energies.theta},
                     {"e_in", energies.e_in},
                     {"eta", energies.eta},
                     {"xi", energies.xi},
                     {"theta_star", energies.theta_star},
                     {"e_f", energies.e_f},
                     {"e_out", energies.e_out},
                     {"gamma_n", energies.gamma_n},
                     {"zeta_n", energies.zeta_n}}})}};
  return dump(doc);
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "n,gamma,ln_gamma,zeta";
  out += kCrlf;
  for (const SweepRow& row : result.rows) {
    out += std::to_string(row.n) + "," + format_value(row.gamma) + "," +
           format_value(row.ln_gamma) + "," + format_value(row.zeta) + kCrlf;
  }
  return out;
}

std::string sweep_json(int n_min, int n_max, const SweepResult& result) {
  json rows = json::array();
  for (const SweepRow& row : result.rows) rows.push_back(sweep_row_json(row));
  const json doc{{"meta",
                  {{"command", "sweep"},
                   {"n_min", n_min},
                   {"n_max", n_max},
                   {"fit_slope", result.fit_slope},
                   {"fit_intercept", result.fit_intercept},
                   {"fit_r_squared", result.fit_r_squared}}},
                 {"rows", rows}};
  return dump(doc);
}

std::string oracle_csv(const OracleComparison& cmp) {
  std::string out = "metric,analytic,oracle,abs_residual,rel_residual,pass";
  out += kCrlf;
  for (const ComparisonRow& row : cmp.rows) {
    out += row.metric + "," + format_value(row.analytic) + "," + format_value(row.oracle) +
           "," + format_value(row.abs_residual) + "," + format_value(row.rel_residual) + "," +
           (row.pass ? "true" : "false") + kCrlf;
  }
  return out;
}

std::string oracle_json(const OracleComparison& cmp) {
  json rows = json::array();
  for (const ComparisonRow& row : cmp.rows) {
    rows.push_back({{"metric", row.metric},
                    {"analytic", row.analytic},
                    {"oracle", row.oracle},
                    {"abs_residual", row.abs_residual},
                    {"rel_residual", row.rel_residual},
                    {"pass", row.pass}});
  }
  const json doc{{"meta",
                  {{"command", "oracle"},
                   {"n", cmp.n_ions},
                   {"cutoff", cmp.cutoff},
                   {"lambda", cmp.lam},
                   {"phi", cmp.phi},
                   {"theta", cmp.theta},
                   {"tol", cmp.tol},
                   {"pass", cmp.pass}}},
                 {"rows", rows}};
  return dump(doc);
}

std::string oracle_failures_json(const OracleComparison& cmp) {
  json failed = json::array();
  for (const ComparisonRow& row : cmp.rows) {
    if (!row.pass) failed.push_back(row.metric);
  }
  return json{{"failed", failed}}.dump() + "\n";
}

}  // namespace qet
