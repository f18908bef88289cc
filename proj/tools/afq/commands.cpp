#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

#include "afq/adiabatic.hpp"
#include "afq/dfs.hpp"
#include "afq/error.hpp"
#include "afq/json_io.hpp"
#include "afq/single_qubit.hpp"
#include "afq/two_qubit.hpp"
#include "config.hpp"

namespace afq::cli {
namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::kConfig, what);
}

double number(const json& block, const char* key, double fallback,
              const char* where) {
  const auto it = block.find(key);
  if (it == block.end()) return fallback;
  if (!it->is_number()) {
    config_error(std::string(where) + "." + key + " must be a number");
  }
  return it->get<double>();
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) config_error(where + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<double> number_list(const json& block, const char* key,
                                std::vector<double> fallback,
                                const char* where) {
  const auto it = block.find(key);
  if (it == block.end()) return fallback;
  if (!it->is_array() || it->empty()) {
    config_error(std::string(where) + "." + key + " must be a non-empty array");
  }
  std::vector<double> out;
  for (const auto& x : *it) {
    if (!x.is_number()) {
      config_error(std::string(where) + "." + key + " must contain numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

ModelParams model_from(const json& config) {
  return json_io::model_params_from_json(block_or_empty(config, "model"));
}

struct PairSweep {
  double delta_b = 3e-3;
  std::vector<std::int64_t> separations{200, 299, 300, 301};
  bool allow_zero = false;
};

PairSweep pair_sweep_from(const json& config, const char* verb) {
  const json b = block_or_empty(config, verb);
  reject_unknown_keys(b, {"delta_b", "separations", "allow_zero_separation"},
                      verb);
  PairSweep s;
  s.delta_b = number(b, "delta_b", s.delta_b, verb);
  if (b.contains("separations")) {
    const json& list = b["separations"];
    if (!list.is_array() || list.empty()) {
      config_error(std::string(verb) + ".separations must be a non-empty array");
    }
    s.separations.clear();
    for (const auto& x : list) {
      s.separations.push_back(integer(x, std::string(verb) + ".separations"));
    }
  }
  if (b.contains("allow_zero_separation")) {
    if (!b["allow_zero_separation"].is_boolean()) {
      config_error(std::string(verb) + ".allow_zero_separation must be a boolean");
    }
    s.allow_zero = b["allow_zero_separation"].get<bool>();
  }
  return s;
}

PairConfig make_pair(const QubitSite& site, std::int64_t sep, bool allow_zero) {
  return allow_zero ? PairConfig::allow_zero(site, sep) : PairConfig(site, sep);
}

// Rows of mixed integer / real cells rendered either as CSV or as a JSON
// {"columns", "rows"} table.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  std::string render(Format format, const json& meta) const {
    if (format == Format::kJson) {
      json rows = json::array();
      for (const auto& r : rows_) rows.push_back(r);
      json out = meta;
      out["columns"] = columns_;
      out["rows"] = std::move(rows);
      return out.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) out += ',';
      out += columns_[i];
    }
    out += '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ',';
        if (r[i].is_number_integer()) {
          out += std::to_string(r[i].get<std::int64_t>());
        } else if (r[i].is_number()) {
          out += format_double(r[i].get<double>());
        } else {
          out += r[i].get<std::string>();
        }
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

json figure_meta(const ModelParams& p) {
  return json{{"model", json_io::to_json(p)}};
}

adiabatic::ImpurityParams default_impurity() {
  // 13C in both roles, B / T_I = 30 T/K, a_min = 1 nm.
  adiabatic::ImpurityParams p;
  p.spec.gamma_I = 2.0 * 3.14159265358979323846 * 10.705e6;
  p.spec.gamma_imp = p.spec.gamma_I;
  p.spec.B = 30.0;
  p.spec.T_I = 1.0;
  p.spec.a_min = 1e-9;
  return p;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string cmd_fig2(const json& config, Format format) {
  const ModelParams p = model_from(config);
  const json b = block_or_empty(config, "fig2");
  reject_unknown_keys(b, {"delta_b", "panel"}, "fig2");
  const std::string panel = b.value("panel", std::string("A"));
  if (panel != "A" && panel != "B") config_error("fig2.panel must be 'A' or 'B'");
  // Panel B zooms on the two positive detunings over tau in [1e4, 1e6].
  const bool zoom = panel == "B";
  const auto deltas = number_list(
      b, "delta_b",
      zoom ? std::vector<double>{1e-3, 3e-3} : std::vector<double>{-3e-3, 1e-3, 3e-3},
      "fig2");
  json grid_config = config;
  if (zoom) {
    json g = block_or_empty(config, "tau_grid");
    if (!g.contains("values")) {
      if (!g.contains("start")) g["start"] = 1e4;
      if (!g.contains("stop")) g["stop"] = 1e6;
    }
    grid_config["tau_grid"] = g;
  }
  const auto grid = tau_grid_from_json(grid_config);

  Table t({"tau", "delta_b", "R_perp"});
  for (double d : deltas) {
    const RateCurve c = curve(p, QubitSite::create(p, d), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.add_row({grid[i], d, c.values[i]});
    }
  }
  return t.render(format, figure_meta(p));
}

std::string cmd_fig3(const json& config, Format format) {
  const ModelParams p = model_from(config);
  const PairSweep sweep = pair_sweep_from(config, "fig3");
  const auto grid = tau_grid_from_json(config);
  const QubitSite site = QubitSite::create(p, sweep.delta_b);

  Table t({"tau", "separation", "R_corr"});
  for (auto sep : sweep.separations) {
    const auto values =
        correlation_curve(p, make_pair(site, sep, sweep.allow_zero), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.add_row({grid[i], sep, values[i]});
    }
  }
  json meta = figure_meta(p);
  meta["delta_b"] = sweep.delta_b;
  return t.render(format, meta);
}

std::string cmd_fig4(const json& config, Format format) {
  const ModelParams p = model_from(config);
  const PairSweep sweep = pair_sweep_from(config, "fig4");
  const auto grid = tau_grid_from_json(config);
  const QubitSite site = QubitSite::create(p, sweep.delta_b);

  Table t({"tau", "separation", "R_sigma", "single_l", "single_k", "corr"});
  for (auto sep : sweep.separations) {
    const PairCurve c =
        pair_curve(p, make_pair(site, sep, sweep.allow_zero), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = c.rates[i];
      t.add_row({grid[i], sep, r.total, r.single_l, r.single_k, r.correlation});
    }
  }
  json meta = figure_meta(p);
  meta["delta_b"] = sweep.delta_b;
  return t.render(format, meta);
}

std::string cmd_dfs_table(const json& config, Format format) {
  const json b = block_or_empty(config, "dfs");
  reject_unknown_keys(b, {"omega_eff", "U"}, "dfs");
  const double omega = number(b, "omega_eff", 100.0, "dfs");
  const double U = number(b, "U", 1.0, "dfs");
  if (omega == 0.0 || !std::isfinite(omega) || !std::isfinite(U)) {
    config_error("dfs.omega_eff must be finite and nonzero, dfs.U finite");
  }
  const dfs::DfsReport report = dfs::dfs_report(omega, U);

  if (format == Format::kJson) {
    json levels = json::array();
    for (const auto& l : report.levels) levels.push_back(json_io::to_json(l));
    json out{{"omega_eff", omega},
             {"U", U},
             {"energy_formula", "-|omega_eff| m_J + U (J (J + 1) - m_J^2)"},
             {"levels", levels},
             {"report", json_io::to_json(report)}};
    out["report"].erase("levels");
    return out.dump(2) + "\n";
  }
  Table t({"J", "m_J", "degeneracy", "energy", "coeff_abs_omega_eff", "coeff_U",
           "symbolic_energy"});
  for (const auto& l : report.levels) {
    t.add_row({l.J, l.m_J, l.degeneracy, l.energy, l.coeff_omega, l.coeff_U,
               l.symbolic_energy});
  }
  return t.render(format, json::object());
}

std::string cmd_impurity(const json& config, Format format) {
  json b = block_or_empty(config, "impurity");
  const double target = number(b, "target_T_D", 1.0, "impurity");
  const bool has_density = b.contains("site_density");
  const double density_override = number(b, "site_density", 0.0, "impurity");
  const bool has_t_par = b.contains("T_parallel_imp");
  const double t_par = number(b, "T_parallel_imp", 0.0, "impurity");
  b.erase("target_T_D");
  b.erase("site_density");
  b.erase("T_parallel_imp");

  json merged = json_io::to_json(default_impurity());
  for (const auto& [k, v] : b.items()) merged[k] = v;
  const adiabatic::ImpurityParams p = json_io::impurity_params_from_json(merged);

  const double density =
      has_density ? density_override : adiabatic::default_site_density(p.spec);
  const double allowed = adiabatic::allowable_concentration(p.spec, target);

  json out{{"impurity", json_io::to_json(p)},
           {"target_T_D", target},
           {"polarization_argument", adiabatic::polarization_argument(p.spec)},
           {"polarization_variance", adiabatic::polarization_variance(p.spec)},
           {"mean_square_modulation", adiabatic::mean_square_modulation(p)},
           {"modulation_per_concentration",
            adiabatic::modulation_per_concentration(p.spec)},
           {"allowable_concentration_per_m3", allowed},
           {"allowable_concentration_per_cm3", allowed * 1e-6},
           {"site_density_per_m3", density},
           {"site_density_source", has_density ? "config" : "1/a_min^3"},
           {"allowable_concentration_percent",
            adiabatic::concentration_percent(allowed, density)},
           {"geometric_prefactor", adiabatic::kGeometricPrefactor},
           {"prefactor_note",
            "mean-square modulation uses 16*pi/15 times the polarization "
            "variance (1 - tanh^2)/4; the threshold inequality is also quoted "
            "with 4*pi/15 times (1 - tanh^2), which is the same quantity. A "
            "threshold read as 4*pi/15 times the variance would be 4x larger."}};
  if (has_t_par) {
    out["T_parallel_imp"] = t_par;
    out["rigid_lattice"] = adiabatic::rigid_lattice_holds(t_par, target);
  }

  if (format == Format::kJson) return out.dump(2) + "\n";
  Table t({"quantity", "value"});
  for (const auto& [k, v] : out.items()) {
    if (v.is_number()) t.add_row({k, v.get<double>()});
  }
  return t.render(format, json::object());
}

std::string cmd_rate(const json& config, Format format) {
  const ModelParams p = model_from(config);
  const json b = block_or_empty(config, "rate");
  reject_unknown_keys(b, {"op", "delta_b", "tau", "separation", "site_index"},
                      "rate");
  const std::string op = b.value("op", std::string("decoherence"));
  const double delta = number(b, "delta_b", 3e-3, "rate");
  const double tau = number(b, "tau", 1e5, "rate");
  const std::int64_t sep =
      b.contains("separation") ? integer(b["separation"], "rate.separation") : 300;
  const std::int64_t k =
      b.contains("site_index") ? integer(b["site_index"], "rate.site_index") : 0;
  const QubitSite site = QubitSite::create(p, delta, k);

  json result{{"op", op}, {"model", json_io::to_json(p)}, {"delta_b", delta},
              {"site_index", k}};
  double value = 0.0;
  bool uses_tau = true;
  bool uses_pair = false;
  if (op == "decoherence") {
    value = decoherence_rate(p, site, tau);
  } else if (op == "longitudinal") {
    value = longitudinal_relaxation_rate(p, site, tau);
  } else if (op == "closed_form") {
    value = rate_closed_form(p, site, tau);
  } else if (op == "decoherence_time") {
    const DecoherenceTime t = inverse_decoherence_time(p, site);
    value = t.dimensionless_rate;
    result["braced"] = t.braced;
    result["rate_per_second"] = t.rate_per_second;
    result["seconds"] = t.seconds;
    uses_tau = false;
  } else if (op == "frequency_shift") {
    value = frequency_shift(p, site);
    result["shift_rad_per_second"] = value * p.omega_E();
    uses_tau = false;
  } else if (op == "correlation" || op == "longitudinal_correlation") {
    value = correlation_rate(p, PairConfig(site, sep), tau);
    uses_pair = true;
  } else if (op == "shifted_single") {
    value = shifted_single_rate(p, PairConfig(site, sep), tau);
    uses_pair = true;
  } else if (op == "total") {
    const PairConfig pair(site, sep);
    const PairRateBreakdown r = total_concurrence_rate(p, pair, tau);
    value = r.total;
    result["single_l"] = r.single_l;
    result["single_k"] = r.single_k;
    result["correlation"] = r.correlation;
    result["concurrence_damping_rate"] = concurrence_damping_rate(p, r.total);
    uses_pair = true;
  } else if (op == "asymptotic_correlation") {
    value = asymptotic_correlation_rate(p, PairConfig(site, sep));
    uses_tau = false;
    uses_pair = true;
  } else if (op == "asymptotic_total") {
    const AsymptoticTotal r = asymptotic_total_rate(p, PairConfig(site, sep));
    value = r.total;
    result["single_l"] = r.single_l;
    result["single_k"] = r.single_k;
    result["correlation"] = r.correlation;
    result["regularized"] = {{"single_l", r.regularized_single_l},
                             {"single_k", r.regularized_single_k},
                             {"correlation", r.regularized_correlation}};
    uses_tau = false;
    uses_pair = true;
  } else {
    config_error("unknown rate.op '" + op +
                 "' (decoherence, longitudinal, closed_form, decoherence_time, "
                 "frequency_shift, correlation, longitudinal_correlation, "
                 "shifted_single, total, asymptotic_correlation, "
                 "asymptotic_total)");
  }
  if (uses_tau) result["tau"] = tau;
  if (uses_pair) result["separation"] = sep;
  result["value"] = value;
  if (op != "frequency_shift") {
    result["physical_rate_per_second"] = physical_rate(value, p);
  }

  if (format == Format::kJson) return result.dump(2) + "\n";
  Table t({"op", "delta_b", "separation", "tau", "value"});
  t.add_row({op, delta, uses_pair ? json(sep) : json("-"),
             uses_tau ? json(tau) : json("inf"), value});
  return t.render(format, json::object());
}

}  // namespace afq::cli
