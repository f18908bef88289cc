#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace afq::cli {

enum class Format { kCsv, kJson };

/// Each command maps a validated config to the full output text. Errors are
/// reported as exceptions (afq::Error and subclasses); nothing is written.
std::string cmd_fig2(const nlohmann::json& config, Format format);
std::string cmd_fig3(const nlohmann::json& config, Format format);
std::string cmd_fig4(const nlohmann::json& config, Format format);
std::string cmd_dfs_table(const nlohmann::json& config, Format format);
std::string cmd_impurity(const nlohmann::json& config, Format format);
std::string cmd_rate(const nlohmann::json& config, Format format);

/// printf("%.16e"), i.e. 17 significant digits.
std::string format_double(double x);

}  // namespace afq::cli
