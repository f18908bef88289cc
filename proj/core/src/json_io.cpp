#include "afq/json_io.hpp"

#include <initializer_list>
#include <string>

#include "afq/error.hpp"

namespace afq::json_io {
namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kConfig, std::string(what) + " must be a JSON object");
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const char* what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) {
      throw Error(ErrorCode::kConfig,
                  std::string("unknown key '") + key + "' in " + what);
    }
  }
}

void read_number(const json& j, const char* key, double& out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number()) {
    throw Error(ErrorCode::kConfig,
                std::string("'") + key + "' must be a number");
  }
  out = it->get<double>();
}

}  // namespace

json to_json(const ModelParams& p) {
  const auto& f = p.fields();
  return json{{"b_C", f.b_C}, {"s", f.s},
              {"a", f.a},     {"g", f.g},
              {"omega_E", f.omega_E}, {"gamma_ratio", f.gamma_ratio}};
}

ModelParams model_params_from_json(const json& j) {
  require_object(j, "model");
  reject_unknown(j, {"b_C", "s", "a", "g", "omega_E", "gamma_ratio"}, "model");
  ModelParams::Fields f = ModelParams::figure_defaults().fields();
  read_number(j, "b_C", f.b_C);
  read_number(j, "s", f.s);
  read_number(j, "a", f.a);
  read_number(j, "g", f.g);
  read_number(j, "omega_E", f.omega_E);
  read_number(j, "gamma_ratio", f.gamma_ratio);
  return ModelParams(f);
}

json to_json(const adiabatic::ImpurityParams& p) {
  return json{{"gamma_I", p.spec.gamma_I}, {"gamma_imp", p.spec.gamma_imp},
              {"B", p.spec.B},             {"T_I", p.spec.T_I},
              {"a_min", p.spec.a_min},     {"C_imp", p.C_imp}};
}

adiabatic::ImpurityParams impurity_params_from_json(const json& j) {
  require_object(j, "impurity");
  reject_unknown(j, {"gamma_I", "gamma_imp", "B", "T_I", "a_min", "C_imp"},
                 "impurity");
  adiabatic::ImpurityParams p;
  read_number(j, "gamma_I", p.spec.gamma_I);
  read_number(j, "gamma_imp", p.spec.gamma_imp);
  read_number(j, "B", p.spec.B);
  read_number(j, "T_I", p.spec.T_I);
  read_number(j, "a_min", p.spec.a_min);
  read_number(j, "C_imp", p.C_imp);
  adiabatic::validate(p);
  return p;
}

json to_json(const dfs::Level& level) {
  return json{{"J", level.J},
              {"m_J", level.m_J},
              {"degeneracy", level.degeneracy},
              {"energy", level.energy},
              {"symbolic", {{"abs_omega_eff", level.coeff_omega},
                            {"U", level.coeff_U}}},
              {"symbolic_energy", level.symbolic_energy}};
}

json to_json(const dfs::DfsReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back(to_json(l));
  json labels = json::array();
  for (const auto& [J, m] : r.ground_labels) {
    labels.push_back({{"J", J}, {"m_J", m}});
  }
  return json{{"omega_eff", r.omega_eff},
              {"U", r.U},
              {"ground", {{"energy", r.ground_energy},
                          {"labels", labels},
                          {"degeneracy", r.ground_degeneracy}}},
              {"dfs_doublet_energy", r.doublet_energy},
              {"gap", r.gap},
              {"expected_gap", r.expected_gap},
              {"gap_matches", r.gap_matches},
              {"projector_trace", r.projector_trace},
              {"projector_deviation", r.projector_deviation},
              {"levels", levels}};
}

}  // namespace afq::json_io
