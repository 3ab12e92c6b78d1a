// json_io.hpp
// JSON and CSV serialization. States serialize as
//   {"dims":[...], "labels":[...], "re":[...], "im":[...]}
// with matrix entries flattened row-major; reports and metric results keep
// fixed field names. CSV numbers are printed with 12 significant digits.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qagent/gadget.hpp"
#include "qagent/metrics.hpp"
#include "qagent/scenarios.hpp"
#include "qagent/states.hpp"

namespace qagent {

nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const PureState& psi);
DensityMatrix density_from_json(const nlohmann::json& j);
PureState pure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GadgetReport& report);
nlohmann::json to_json(const MetricResult& metric);
nlohmann::json to_json(const SweepRecord& record);

// Fixed-point-free formatting with 12 significant digits; round-trips
// through strtod to within 1e-11 for the value ranges in this project.
std::string format_sig(double x);

// Header `t,uncertainty_bits,info_gain_bits,back_action_bits` plus one row
// per record, terminated by newlines.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

}  // namespace qagent
