#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qet/coherent_states.hpp"
#include "qet/oracle_compare.hpp"
#include "qet/serialize.hpp"
#include "qet/sweep.hpp"

namespace py = pybind11;
using namespace qet;

PYBIND11_MODULE(_qet_ion, m) {
  m.doc() = "Quantum energy teleportation on a linear trapped-ion crystal";

  py::register_exception<solver_error>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<degeneracy_error>(m, "DegeneracyError", PyExc_RuntimeError);
  py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<CrystalSpec>(m, "CrystalSpec")
      .def(py::init<int, double, double>(), py::arg("n_ions"), py::arg("mass") = 1.0,
           py::arg("trap_frequency") = 1.0)
      .def_readwrite("n_ions", &CrystalSpec::n_ions)
      .def_readwrite("mass", &CrystalSpec::mass)
      .def_readwrite("trap_frequency", &CrystalSpec::trap_frequency);

  py::class_<EquilibriumConfig>(m, "EquilibriumConfig")
      .def(py::init<>())
      .def_readwrite("u", &EquilibriumConfig::u)
      .def_readwrite("residual", &EquilibriumConfig::residual);

  py::class_<ModeDecomposition>(m, "ModeDecomposition")
      .def_readonly("coupling", &ModeDecomposition::coupling)
      .def_readonly("eigenvalues", &ModeDecomposition::eigenvalues)
      .def_readonly("eigenvectors", &ModeDecomposition::eigenvectors)
      .def_readonly("delta", &ModeDecomposition::delta)
      .def_property_readonly("n_ions", &ModeDecomposition::n_ions);

  py::class_<WMatrices>(m, "WMatrices")
      .def_readonly("w1", &WMatrices::w1)
      .def_readonly("w2", &WMatrices::w2)
      .def_readonly("w3", &WMatrices::w3);

  m.def("solve_equilibrium", &solve_equilibrium, py::arg("spec"));
  m.def("build_mode_decomposition", &build_mode_decomposition, py::arg("eq"));
  m.def("equilibrium_force", &equilibrium_force, py::arg("u"));
  m.def("coupling_matrix", &coupling_matrix, py::arg("u"));
  m.def("w_matrices", &w_matrices, py::arg("modes"), py::arg("nu"), py::arg("t"));
  m.def("scale_length", &scale_length, py::arg("charge_number"), py::arg("charge_unit"),
        py::arg("mass"), py::arg("nu"));

  py::class_<CoherentParams>(m, "CoherentParams")
      .def(py::init<Eigen::VectorXd, Eigen::VectorXd>(), py::arg("alpha"), py::arg("beta"))
      .def_readwrite("alpha", &CoherentParams::alpha)
      .def_readwrite("beta", &CoherentParams::beta);

  m.def("coherent_overlap", &coherent_overlap, py::arg("c1"), py::arg("c2"), py::arg("modes"),
        py::arg("m"), py::arg("nu"));
  m.def("ground_q_matrix_element", &ground_q_matrix_element, py::arg("site"), py::arg("lam"),
        py::arg("sign"), py::arg("modes"), py::arg("m"), py::arg("nu"));
  m.def("ground_q_cos_2g1", &ground_q_cos_2g1, py::arg("site"), py::arg("lam"), py::arg("phi"),
        py::arg("modes"), py::arg("m"), py::arg("nu"));

  py::class_<MeasurementParams>(m, "MeasurementParams")
      .def(py::init<double, double, std::optional<double>>(), py::arg("phi"), py::arg("lam"),
           py::arg("theta") = std::nullopt)
      .def_readwrite("phi", &MeasurementParams::phi)
      .def_readwrite("lam", &MeasurementParams::lam)
      .def_readwrite("theta", &MeasurementParams::theta);

  py::class_<ProtocolEnergies>(m, "ProtocolEnergies")
      .def_readonly("e_in", &ProtocolEnergies::e_in)
      .def_readonly("eta", &ProtocolEnergies::eta)
      .def_readonly("xi", &ProtocolEnergies::xi)
      .def_readonly("theta_star", &ProtocolEnergies::theta_star)
      .def_readonly("theta", &ProtocolEnergies::theta)
      .def_readonly("e_f", &ProtocolEnergies::e_f)
      .def_readonly("e_out", &ProtocolEnergies::e_out)
      .def_readonly("gamma_n", &ProtocolEnergies::gamma_n)
      .def_readonly("zeta_n", &ProtocolEnergies::zeta_n);

  m.def("protocol_energies", &protocol_energies, py::arg("spec"), py::arg("modes"),
        py::arg("params"));
  m.def("eta_via_coherent_states", &eta_via_coherent_states, py::arg("spec"), py::arg("modes"),
        py::arg("params"));
  m.def("n2_closed_form", &n2_closed_form, py::arg("m"), py::arg("nu"), py::arg("lam"),
        py::arg("phi"));
  m.def("energy_in_joules", &energy_in_joules, py::arg("energy_natural"),
        py::arg("nu_rad_per_s"));

  py::class_<FockBasisSpec>(m, "FockBasisSpec")
      .def(py::init<int, int, long>(), py::arg("n_ions"), py::arg("cutoff"),
           py::arg("max_dimension") = 20000)
      .def_readwrite("n_ions", &FockBasisSpec::n_ions)
      .def_readwrite("cutoff", &FockBasisSpec::cutoff)
      .def_readwrite("max_dimension", &FockBasisSpec::max_dimension);

  m.def("fock_dimension", &fock_dimension, py::arg("basis"));

  py::class_<FockWorkspace>(m, "FockWorkspace")
      .def_readonly("spec", &FockWorkspace::spec)
      .def_readonly("basis", &FockWorkspace::basis)
      .def_readonly("a_ops", &FockWorkspace::a_ops)
      .def_readonly("q_ops", &FockWorkspace::q_ops)
      .def_readonly("p_ops", &FockWorkspace::p_ops)
      .def_readonly("h_diag", &FockWorkspace::h_diag)
      .def_readonly("ground", &FockWorkspace::ground)
      .def_readonly("total_occupation", &FockWorkspace::total_occupation)
      .def_property_readonly("dimension", &FockWorkspace::dimension)
      .def("hamiltonian", &FockWorkspace::hamiltonian);

  py::class_<KrausPair>(m, "KrausPair")
      .def_readonly("m_plus", &KrausPair::m_plus)
      .def_readonly("m_minus", &KrausPair::m_minus);

  py::class_<DensityState>(m, "DensityState")
      .def(py::init<Eigen::MatrixXcd>(), py::arg("rho"))
      .def_readwrite("rho", &DensityState::rho);

  py::enum_<Feedback>(m, "Feedback")
      .value("conditioned", Feedback::conditioned)
      .value("unconditioned", Feedback::unconditioned);

  py::class_<OracleEnergies>(m, "OracleEnergies")
      .def_readonly("e_in", &OracleEnergies::e_in)
      .def_readonly("e_f", &OracleEnergies::e_f)
      .def_readonly("e_out", &OracleEnergies::e_out)
      .def_readonly("rho_m", &OracleEnergies::rho_m)
      .def_readonly("rho_f", &OracleEnergies::rho_f);

  m.def("build_workspace", &build_workspace, py::arg("spec"), py::arg("modes"),
        py::arg("basis"));
  m.def("kraus_pair", &kraus_pair, py::arg("ws"), py::arg("params"));
  m.def("cos_2g1", &cos_2g1, py::arg("ws"), py::arg("params"));
  m.def("displaced_ground", &displaced_ground, py::arg("ws"), py::arg("alpha1"));
  m.def("simulate_protocol", &simulate_protocol, py::arg("ws"), py::arg("modes"),
        py::arg("params"), py::arg("feedback") = Feedback::conditioned);
  m.def("eta_oracle", &eta_oracle, py::arg("ws"), py::arg("modes"), py::arg("params"));
  m.def("local_energy_profile", &local_energy_profile, py::arg("ws"), py::arg("modes"),
        py::arg("rho"), py::arg("t"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("n", &SweepRow::n)
      .def_readonly("gamma", &SweepRow::gamma)
      .def_readonly("ln_gamma", &SweepRow::ln_gamma)
      .def_readonly("zeta", &SweepRow::zeta);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("fit_slope", &SweepResult::fit_slope)
      .def_readonly("fit_intercept", &SweepResult::fit_intercept)
      .def_readonly("fit_r_squared", &SweepResult::fit_r_squared);

  m.def("sweep_gamma_zeta", &sweep_gamma_zeta, py::arg("n_min"), py::arg("n_max"));

  py::class_<ComparisonRow>(m, "ComparisonRow")
      .def_readonly("metric", &ComparisonRow::metric)
      .def_readonly("analytic", &ComparisonRow::analytic)
      .def_readonly("oracle", &ComparisonRow::oracle)
      .def_readonly("abs_residual", &ComparisonRow::abs_residual)
      .def_readonly("rel_residual", &ComparisonRow::rel_residual)
      .def_readonly("pass_", &ComparisonRow::pass);

  py::class_<OracleComparison>(m, "OracleComparison")
      .def_readonly("n_ions", &OracleComparison::n_ions)
      .def_readonly("cutoff", &OracleComparison::cutoff)
      .def_readonly("lam", &OracleComparison::lam)
      .def_readonly("phi", &OracleComparison::phi)
      .def_readonly("theta", &OracleComparison::theta)
      .def_readonly("tol", &OracleComparison::tol)
      .def_readonly("rows", &OracleComparison::rows)
      .def_readonly("pass_", &OracleComparison::pass);

  m.def("compare_oracle", &compare_oracle, py::arg("n"), py::arg("cutoff"), py::arg("lam"),
        py::arg("phi"), py::arg("theta") = std::nullopt, py::arg("tol") = 1e-4);

  m.def("sweep_csv", &sweep_csv, py::arg("result"));
  m.def("sweep_json", &sweep_json, py::arg("n_min"), py::arg("n_max"), py::arg("result"));
  m.def("oracle_csv", &oracle_csv, py::arg("cmp"));
  m.def("oracle_json", &oracle_json, py::arg("cmp"));
}
