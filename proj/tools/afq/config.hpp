#pragma once

// Run configuration for the afq command-line tool.
//
// A run is described by one JSON document:
//
//   {
//     "model":    { ModelParams fields },
//     "tau_grid": { "spacing": "log" | "linear", "start": 1e2, "stop": 1e6,
//                   "count": 41 }   or   { "values": [0, 10, 100] },
//     "fig2":     { "delta_b": [-3e-3, 1e-3, 3e-3] },
//     "fig3":     { "delta_b": 3e-3, "separations": [200, 299, 300, 301],
//                   "allow_zero_separation": false },
//     "fig4":     { same keys as fig3 },
//     "dfs":      { "omega_eff": 100, "U": 1 },
//     "impurity": { ImpurityParams fields, "target_T_D": 1,
//                   "site_density": <1/m^3, optional>,
//                   "T_parallel_imp": <s, optional> },
//     "rate":     { "op": "decoherence", "delta_b": 3e-3, "tau": 1e5,
//                   "separation": 300 },
//     "output":   { "path": "...", "format": "csv" | "json" }
//   }
//
// Every block is optional; missing blocks take the figure defaults.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace afq::cli {

using nlohmann::json;

inline constexpr std::size_t kMinGridCount = 2;
inline constexpr std::size_t kMaxGridCount = 10'000'000;

/// Parses "dotted.key=value" and stores value at that path, creating
/// intermediate objects. The value is parsed as JSON when possible and kept
/// as a string otherwise. Throws afq::Error(kConfig).
void apply_override(json& root, std::string_view assignment);

/// Reads the config file (empty path = empty config) and applies overrides.
json load_config(const std::string& path,
                 const std::vector<std::string>& overrides);

/// Rejects keys outside `known` in `block`; `where` names the block.
void reject_unknown_keys(const json& block,
                         const std::vector<std::string>& known,
                         std::string_view where);

/// Returns root[key] if present (must be an object), else an empty object.
json block_or_empty(const json& root, const std::string& key);

/// Default grid: 41 logarithmically spaced points on [1e2, 1e6].
std::vector<double> tau_grid_from_json(const json& root);

}  // namespace afq::cli
