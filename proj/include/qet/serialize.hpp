#pragma once

#include <string>

#include "qet/oracle_compare.hpp"
#include "qet/qet_protocol.hpp"
#include "qet/sweep.hpp"

// Renderers behind the CLI. CSV is RFC-4180 style (header row, CRLF line
// endings, '.' decimal separator) with 15 significant digits; JSON is one
// top-level object {"meta": {...}, "rows": [...]}. Identical inputs render
// byte-identically.

namespace qet {

std::string format_value(double value);  // %.15g, C locale

std::string modes_csv(const EquilibriumConfig& eq, const ModeDecomposition& modes);
std::string modes_json(const CrystalSpec& spec, const EquilibriumConfig& eq,
                       const ModeDecomposition& modes);

std::string protocol_csv(const CrystalSpec& spec, const MeasurementParams& params,
                         const ProtocolEnergies& energies);
std::string protocol_json(const CrystalSpec& spec, const MeasurementParams& params,
                          const ProtocolEnergies& energies);

std::string sweep_csv(const SweepResult& result);
std::string sweep_json(int n_min, int n_max, const SweepResult& result);

std::string oracle_csv(const OracleComparison& cmp);
std::string oracle_json(const OracleComparison& cmp);

// The failing metric names as a JSON array, for exit-code diagnostics.
std::string oracle_failures_json(const OracleComparison& cmp);

}  // namespace qet
