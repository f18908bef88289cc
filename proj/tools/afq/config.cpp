#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "afq/error.hpp"

namespace afq::cli {
namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::kConfig, what);
}

double number_at(const json& j, const char* key, double fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) config_error(std::string("tau_grid.") + key + " must be a number");
  return it->get<double>();
}

}  // namespace

void apply_override(json& root, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    config_error("--set expects dotted.key=value, got '" + std::string(assignment) + "'");
  }
  const std::string path(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));

  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) config_error("empty key segment in --set path '" + path + "'");
    if (!node->is_object()) {
      if (!node->is_null()) config_error("--set path '" + path + "' crosses a non-object value");
      *node = json::object();
    }
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = std::move(value);
}

json load_config(const std::string& path,
                 const std::vector<std::string>& overrides) {
  json root = json::object();
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) config_error("cannot open config file '" + path + "'");
    try {
      root = json::parse(in);
    } catch (const json::parse_error& e) {
      config_error("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!root.is_object()) config_error("config root must be a JSON object");
  }
  for (const auto& o : overrides) apply_override(root, o);
  reject_unknown_keys(root,
                      {"model", "tau_grid", "fig2", "fig3", "fig4", "dfs",
                       "impurity", "rate", "output"},
                      "config");
  return root;
}

void reject_unknown_keys(const json& block,
                         const std::vector<std::string>& known,
                         std::string_view where) {
  if (!block.is_object()) return;
  for (const auto& [key, value] : block.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      config_error("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

json block_or_empty(const json& root, const std::string& key) {
  const auto it = root.find(key);
  if (it == root.end() || it->is_null()) return json::object();
  if (!it->is_object()) config_error("'" + key + "' must be a JSON object");
  return *it;
}

std::vector<double> tau_grid_from_json(const json& root) {
  const json g = block_or_empty(root, "tau_grid");
  reject_unknown_keys(g, {"spacing", "start", "stop", "count", "values"},
                      "tau_grid");

  if (g.contains("values")) {
    if (g.size() != 1) config_error("tau_grid.values excludes the other keys");
    const json& v = g["values"];
    if (!v.is_array() || v.empty()) config_error("tau_grid.values must be a non-empty array");
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) config_error("tau_grid.values must contain numbers");
      out.push_back(x.get<double>());
    }
    if (out.size() > kMaxGridCount) config_error("tau_grid has more than 1e7 points");
    return out;
  }

  const std::string spacing = g.value("spacing", std::string("log"));
  const double start = number_at(g, "start", 1e2);
  const double stop = number_at(g, "stop", 1e6);
  const double count_d = number_at(g, "count", 41.0);
  if (count_d != std::floor(count_d) || count_d < kMinGridCount ||
      count_d > kMaxGridCount) {
    config_error("tau_grid.count must be an integer in [2, 1e7]");
  }
  if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start) ||
      start < 0.0) {
    config_error("tau_grid needs finite 0 <= start < stop");
  }
  const auto n = static_cast<std::size_t>(count_d);
  std::vector<double> out(n);
  if (spacing == "log") {
    if (!(start > 0.0)) config_error("log tau_grid needs start > 0");
    const double l0 = std::log(start);
    const double l1 = std::log(stop);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) /
                                 static_cast<double>(n - 1));
    }
  } else if (spacing == "linear") {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(n - 1);
    }
  } else {
    config_error("tau_grid.spacing must be 'log' or 'linear'");
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

}  // namespace afq::cli
