#pragma once

// JSON serialization of parameter sets and reports.
//
// ModelParams uses the field names of ModelParams::Fields:
//   {"b_C": 0.5, "s": 1e-5, "a": 1e-3, "g": 1e-5,
//    "omega_E": 6.283185307179586e11, "gamma_ratio": 1e-3}
// Missing keys take the figure defaults; unknown keys are rejected.
//
// ImpurityParams: {"gamma_I", "gamma_imp", "B", "T_I", "a_min", "C_imp"} in
// SI units (rad/(s T), T, K, m, 1/m^3). C_imp defaults to 0.

#include <nlohmann/json.hpp>

#include "afq/adiabatic.hpp"
#include "afq/dfs.hpp"
#include "afq/model.hpp"

namespace afq::json_io {

using nlohmann::json;

json to_json(const ModelParams& p);
/// Throws afq::Error(kConfig) on unknown keys or non-numeric values, and the
/// ModelParams validation errors on invalid values.
ModelParams model_params_from_json(const json& j);

json to_json(const adiabatic::ImpurityParams& p);
adiabatic::ImpurityParams impurity_params_from_json(const json& j);

json to_json(const dfs::Level& level);
json to_json(const dfs::DfsReport& report);

}  // namespace afq::json_io
