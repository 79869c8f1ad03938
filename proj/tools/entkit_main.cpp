// entkit: entanglement analysis of finite-dimensional quantum states.
//
// Subcommands: analyze, sweep, catalog list, validate.  Exit codes: 0 on
// success, 2 on usage or ingestion errors, 3 on numeric failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "entkit/analysis.hpp"
#include "entkit/catalog.hpp"
#include "entkit/jsonio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::map<std::string, double> parse_params(const std::vector<std::string>& kv_pairs) {
  std::map<std::string, double> params;
  for (const auto& kv : kv_pairs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    try {
      std::size_t used = 0;
      params[key] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("--param " + key + ": '" + value + "' is not a number");
    }
  }
  return params;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open --out file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement detection, classification, and quantification toolkit"};
  app.require_subcommand(1);

  std::string state_file, state_name, out_path, format = "json";
  std::vector<std::string> param_kv;
  std::string criteria_csv, measures_csv;
  std::uint64_t seed = 1;

  auto add_state_options = [&](CLI::App* cmd, bool need_state) {
    cmd->add_option("--state", state_file, "state file (JSON document)");
    cmd->add_option("--name", state_name, "catalog state name");
    cmd->add_option("--param", param_kv, "state parameter k=v (repeatable)");
    if (need_state) {
      // exactly one of --state/--name, checked at run time for a usage error.
    }
    cmd->add_option("--seed", seed, "random seed for the stochastic analyses");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    cmd->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "run criteria and measures on one state");
  add_state_options(analyze, true);
  analyze->add_option("--criteria", criteria_csv,
                      "comma list of criteria (default: all applicable)");
  analyze->add_option("--measures", measures_csv,
                      "comma list of measures (default: all applicable)");
  bool no_dense_coding = false, no_multipartite = false;
  analyze->add_flag("--no-dense-coding", no_dense_coding, "skip the dense-coding report");
  analyze->add_flag("--no-multipartite", no_multipartite, "skip the multipartite summary");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan one free parameter of a catalog state");
  add_state_options(sweep_cmd, true);
  std::string sweep_param;
  double sweep_lo = 0.0, sweep_hi = 1.0;
  std::size_t sweep_points = 51;
  sweep_cmd->add_option("--sweep", sweep_param, "free parameter name")->required();
  sweep_cmd->add_option("--from", sweep_lo, "grid start")->required();
  sweep_cmd->add_option("--to", sweep_hi, "grid end")->required();
  sweep_cmd->add_option("--points", sweep_points, "grid size (default 51)");
  sweep_cmd->add_option("--criteria", criteria_csv,
                        "comma list of analyses (criteria plus 'dc'; default: ppt)");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
  CLI::App* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list the named states");
  catalog_list_cmd->add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  catalog_cmd->require_subcommand(1);

  CLI::App* validate = app.add_subcommand("validate", "validate a state file");
  validate->add_option("--state", state_file, "state file (JSON document)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      entkit::StateSpec spec{state_name, parse_params(param_kv), state_file};
      entkit::Selection selection;
      selection.criteria = split_list(criteria_csv);
      selection.measures = split_list(measures_csv);
      selection.dense_coding = !no_dense_coding;
      selection.multipartite = !no_multipartite;
      const auto report = entkit::run_analysis(spec, selection, seed);
      emit(format == "json" ? entkit::report_to_json(report)
                            : entkit::report_to_table(report),
           out_path);
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      entkit::StateSpec spec{state_name, parse_params(param_kv), state_file};
      std::vector<std::string> analyses = split_list(criteria_csv);
      if (analyses.empty()) analyses = {"ppt"};
      const auto result =
          entkit::sweep(spec, sweep_param, sweep_lo, sweep_hi, sweep_points, analyses, seed);
      emit(format == "json" ? entkit::sweep_to_json(result)
                            : entkit::sweep_to_table(result),
           out_path);
      return kExitOk;
    }
    if (catalog_list_cmd->parsed()) {
      if (format == "table") {
        std::ostringstream out;
        for (const auto& e : entkit::catalog_list()) {
          out << e.name;
          for (const auto& p : e.parameters) out << "  [" << p << "]";
          out << "\n    " << e.description << "\n";
        }
        emit(out.str(), out_path);
      } else {
        auto doc = entkit::jsonio::Value::array();
        for (const auto& e : entkit::catalog_list()) {
          auto row = entkit::jsonio::Value::object();
          row.set("name", entkit::jsonio::Value::string(e.name));
          row.set("description", entkit::jsonio::Value::string(e.description));
          auto ps = entkit::jsonio::Value::array();
          for (const auto& p : e.parameters) ps.push(entkit::jsonio::Value::string(p));
          row.set("parameters", std::move(ps));
          doc.push(std::move(row));
        }
        emit(doc.dump(2), out_path);
      }
      return kExitOk;
    }
    if (validate->parsed()) {
      const auto loaded = entkit::read_state_file(state_file);
      const bool pure = std::holds_alternative<entkit::PureState>(loaded.state);
      std::cout << "valid " << (pure ? "pure" : "density") << " state";
      if (!loaded.label.empty()) std::cout << " '" << loaded.label << "'";
      std::cout << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
