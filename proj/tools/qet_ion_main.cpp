// qet-ion: phonon modes, protocol energies, N-sweeps and oracle cross-checks
// for quantum energy teleportation on a linear ion crystal. All quantities in
// natural units (m = nu = hbar = 1); energies are in units of nu.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qet/serialize.hpp"

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty means stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write output to this path instead of stdout");
}

int emit(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) {
    std::cerr << "qet-ion: cannot open " << out.path << " for writing\n";
    return 1;
  }
  file << text;
  return file.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum energy teleportation on a linear trapped-ion crystal"};
  app.require_subcommand(1);

  // modes
  int modes_n = 2;
  OutputOptions modes_out;
  CLI::App* modes_cmd =
      app.add_subcommand("modes", "Equilibrium positions, spectrum, eigenvectors and Delta");
  modes_cmd->add_option("--n", modes_n, "Number of ions")->required()->check(CLI::Range(2, 64));
  add_output_flags(modes_cmd, modes_out);

  // protocol
  int protocol_n = 2;
  double protocol_lambda = 0.0;
  double protocol_phi = 0.0;
  std::optional<double> protocol_theta;
  OutputOptions protocol_out;
  CLI::App* protocol_cmd =
      app.add_subcommand("protocol", "Closed-form protocol energies for one parameter point");
  protocol_cmd->add_option("--n", protocol_n, "Number of ions")
      ->required()
      ->check(CLI::Range(2, 64));
  protocol_cmd->add_option("--lambda", protocol_lambda, "Measurement coupling, units of sqrt(m nu)")
      ->required();
  protocol_cmd->add_option("--phi", protocol_phi, "Measurement offset, radians")->required();
  protocol_cmd->add_option("--theta", protocol_theta,
                           "Feedback amplitude (default: the optimum eta/(2 xi))");
  add_output_flags(protocol_cmd, protocol_out);

  // sweep
  int sweep_min = 2, sweep_max = 10;
  OutputOptions sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "gamma_N and zeta_N over a range of crystal sizes");
  sweep_cmd->add_option("--n-min", sweep_min, "Smallest N")->check(CLI::Range(2, 12))
      ->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_max, "Largest N")->check(CLI::Range(2, 12))
      ->capture_default_str();
  add_output_flags(sweep_cmd, sweep_out);

  // oracle
  int oracle_n = 2, oracle_cutoff = 12;
  double oracle_lambda = 0.3, oracle_phi = 0.0, oracle_tol = 1e-4;
  std::optional<double> oracle_theta;
  OutputOptions oracle_out;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Truncated-Fock cross-check of the closed forms; exit code signals pass/fail");
  oracle_cmd->add_option("--n", oracle_n, "Number of ions (2..4)")->required()
      ->check(CLI::Range(2, 4));
  oracle_cmd->add_option("--cutoff", oracle_cutoff, "Fock levels per mode")
      ->check(CLI::Range(2, 4096))->capture_default_str();
  oracle_cmd->add_option("--lambda", oracle_lambda, "Measurement coupling")->required();
  oracle_cmd->add_option("--phi", oracle_phi, "Measurement offset, radians")->required();
  oracle_cmd->add_option("--theta", oracle_theta, "Feedback amplitude (default: optimum)");
  oracle_cmd->add_option("--tol", oracle_tol, "Pass tolerance per metric")
      ->capture_default_str();
  add_output_flags(oracle_cmd, oracle_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (modes_cmd->parsed()) {
      const qet::CrystalSpec spec{modes_n, 1.0, 1.0};
      const qet::EquilibriumConfig eq = qet::solve_equilibrium(spec);
      const qet::ModeDecomposition modes = qet::build_mode_decomposition(eq);
      return emit(modes_out, modes_out.format == "json" ? qet::modes_json(spec, eq, modes)
                                                        : qet::modes_csv(eq, modes));
    }
    if (protocol_cmd->parsed()) {
      const qet::CrystalSpec spec{protocol_n, 1.0, 1.0};
      const qet::ModeDecomposition modes =
          qet::build_mode_decomposition(qet::solve_equilibrium(spec));
      const qet::MeasurementParams params{protocol_phi, protocol_lambda, protocol_theta};
      const qet::ProtocolEnergies energies = qet::protocol_energies(spec, modes, params);
      return emit(protocol_out, protocol_out.format == "json"
                                    ? qet::protocol_json(spec, params, energies)
                                    : qet::protocol_csv(spec, params, energies));
    }
    if (sweep_cmd->parsed()) {
      const qet::SweepResult result = qet::sweep_gamma_zeta(sweep_min, sweep_max);
      return emit(sweep_out, sweep_out.format == "json"
                                 ? qet::sweep_json(sweep_min, sweep_max, result)
                                 : qet::sweep_csv(result));
    }
    if (oracle_cmd->parsed()) {
      const qet::OracleComparison cmp = qet::compare_oracle(
          oracle_n, oracle_cutoff, oracle_lambda, oracle_phi, oracle_theta, oracle_tol);
      const int rc = emit(oracle_out, oracle_out.format == "json" ? qet::oracle_json(cmp)
                                                                  : qet::oracle_csv(cmp));
      if (rc != 0) return rc;
      if (!cmp.pass) {
        std::cerr << qet::oracle_failures_json(cmp);
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "qet-ion: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
