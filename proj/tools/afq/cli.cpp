#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <system_error>

#include <CLI11.hpp>

#include "afq/error.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace afq::cli {
namespace {

namespace fs = std::filesystem;

using Command = std::function<std::string(const nlohmann::json&, Format)>;

struct Verb {
  const char* name;
  const char* help;
  Command fn;
  Format default_format;
};

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> v{
      {"fig2", "single-qubit rate curves R_perp(tau) per detuning", cmd_fig2,
       Format::kCsv},
      {"fig3", "pair correlation rate curves per separation", cmd_fig3,
       Format::kCsv},
      {"fig4", "total pair rate and its decomposition per separation",
       cmd_fig4, Format::kCsv},
      {"dfs-table", "four-spin cluster level table and DFS report",
       cmd_dfs_table, Format::kJson},
      {"impurity", "impurity-isotope modulation and allowable concentration",
       cmd_impurity, Format::kJson},
      {"rate", "single-point evaluation of a rate operation", cmd_rate,
       Format::kJson},
  };
  return v;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kQuadratureNonconvergence:
    case ErrorCode::kDegeneracyResolution:
      return kExitNumerical;
    default:
      return kExitConfig;
  }
}

void write_atomically(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  fs::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error(ErrorCode::kConfig,
                  "cannot open output '" + path.string() + "' for writing");
    }
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::kConfig, "failed writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kConfig, "cannot move output into '" + path.string() + "'");
  }
}

std::string format_name(Format f) { return f == Format::kCsv ? "csv" : "json"; }

}  // namespace

int report_error(const std::exception& e, std::string_view verb,
                 std::ostream& err) {
  if (const auto* q = dynamic_cast<const QuadratureError*>(&e)) {
    err << "afq " << verb << ": numerical failure: " << q->what()
        << " (estimate " << q->value() << ", error " << q->abs_error() << ", "
        << q->intervals() << " intervals)\n";
    return kExitNumerical;
  }
  if (const auto* a = dynamic_cast<const Error*>(&e)) {
    err << "afq " << verb << ": " << to_string(a->code()) << ": " << a->what()
        << "\n";
    return exit_code_for(a->code());
  }
  err << "afq " << verb << ": " << e.what() << "\n";
  return kExitNumerical;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decoherence rates of nuclear-spin qubits in an easy-axis antiferromagnet"};
  app.name(args.empty() ? "afq" : args.front());
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format_text;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output file (default: $AFQ_OUTPUT_DIR/<verb>.<ext>, else stdout)");
  app.add_option("--format", format_text, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--set", overrides, "override a config leaf: dotted.key=value")
      ->take_all();

  std::map<const CLI::App*, const Verb*> by_app;
  for (const auto& v : verbs()) by_app[app.add_subcommand(v.name, v.help)] = &v;

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "afq: " << e.what() << "\n";
    return kExitConfig;
  }

  const Verb* verb = nullptr;
  for (const auto* sub : app.get_subcommands()) verb = by_app.at(sub);

  try {
    const nlohmann::json config = load_config(config_path, overrides);
    const nlohmann::json output = block_or_empty(config, "output");
    reject_unknown_keys(output, {"path", "format"}, "output");

    Format format = verb->default_format;
    std::string fmt = format_text;
    if (fmt.empty() && output.contains("format")) {
      if (!output["format"].is_string()) {
        throw Error(ErrorCode::kConfig, "output.format must be a string");
      }
      fmt = output["format"].get<std::string>();
    }
    if (fmt == "csv") {
      format = Format::kCsv;
    } else if (fmt == "json") {
      format = Format::kJson;
    } else if (!fmt.empty()) {
      throw Error(ErrorCode::kConfig, "output.format must be 'csv' or 'json'");
    }

    std::string path = out_path;
    if (path.empty() && output.contains("path")) {
      if (!output["path"].is_string()) {
        throw Error(ErrorCode::kConfig, "output.path must be a string");
      }
      path = output["path"].get<std::string>();
    }
    if (path.empty()) {
      if (const char* dir = std::getenv("AFQ_OUTPUT_DIR"); dir && *dir) {
        path = (fs::path(dir) / (std::string(verb->name) + "." + format_name(format))).string();
      }
    }

    const std::string content = verb->fn(config, format);
    if (path.empty() || path == "-") {
      out << content;
      out.flush();
    } else {
      write_atomically(path, content);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(e, verb->name, err);
  }
}

}  // namespace afq::cli
