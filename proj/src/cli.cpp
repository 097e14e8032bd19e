#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "holeburn/errors.hpp"
#include "holeburn/runner.hpp"

namespace holeburn {

namespace {

struct Overrides {
  std::string config_path;
  std::optional<double> alpha;
  std::optional<double> alpha_phase;
  std::optional<std::string> beta;
  std::optional<std::string> targets;
  std::optional<long> n;
  std::optional<int> search_depth;
  std::optional<double> tail_tol;
  std::optional<std::string> out;
  bool strict_budget = false;
  std::optional<int> workers;
  std::optional<double> t_qubit;
  std::optional<double> t_nr;
  std::optional<std::string> sweep_param;
  std::optional<double> sweep_min;
  std::optional<double> sweep_max;
  std::optional<int> sweep_steps;
  std::optional<std::string> sweep_mode;
};

void add_common_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "JSON experiment config");
  cmd.add_option("--alpha", o.alpha, "coherent amplitude modulus");
  cmd.add_option("--alpha-phase", o.alpha_phase, "coherent amplitude phase (rad)");
  cmd.add_option("--beta", o.beta, "coupling, e.g. 45MHz, 2.8e8rad/s, or 1 (dimensionless)");
  cmd.add_option("--tail-tol", o.tail_tol, "Fock truncation tolerance");
  cmd.add_option("--out", o.out, "output directory (report.json, distribution.csv)");
  cmd.add_flag("--strict-budget", o.strict_budget, "fail when the schedule exceeds the decoherence budget");
  cmd.add_option("--t-qubit", o.t_qubit, "qubit decoherence time (s)");
  cmd.add_option("--t-nr", o.t_nr, "resonator decoherence time (s)");
}

std::vector<long> parse_targets(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--targets: cannot parse '" + item + "'");
    }
  }
  return out;
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

nlohmann::json merged_config(const Overrides& o, const std::string& mode) {
  nlohmann::json doc = load_config(o.config_path);
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  doc["mode"] = mode;
  if (o.alpha || o.alpha_phase) {
    nlohmann::json alpha = {{"modulus", 0.0}, {"phase", 0.0}};
    if (doc.contains("alpha")) {
      if (doc["alpha"].is_object())
        alpha.update(doc["alpha"]);
      else
        alpha["modulus"] = doc["alpha"];
    }
    if (o.alpha) alpha["modulus"] = *o.alpha;
    if (o.alpha_phase) alpha["phase"] = *o.alpha_phase;
    doc["alpha"] = alpha;
  }
  if (o.beta) doc["beta"] = *o.beta;
  if (o.targets) doc["targets"] = parse_targets(*o.targets);
  if (o.n) doc["n"] = *o.n;
  if (o.search_depth) doc["search_depth"] = *o.search_depth;
  if (o.tail_tol) doc["tail_tol"] = *o.tail_tol;
  if (o.out) doc["output"]["dir"] = *o.out;
  if (o.strict_budget) doc["budget"]["strict"] = true;
  if (o.t_qubit) doc["budget"]["t_qubit"] = *o.t_qubit;
  if (o.t_nr) doc["budget"]["t_nr"] = *o.t_nr;
  if (o.workers) doc["workers"] = *o.workers;
  if (o.sweep_param) doc["sweep"]["parameter"] = *o.sweep_param;
  if (o.sweep_min) doc["sweep"]["min"] = *o.sweep_min;
  if (o.sweep_max) doc["sweep"]["max"] = *o.sweep_max;
  if (o.sweep_steps) doc["sweep"]["steps"] = *o.sweep_steps;
  if (o.sweep_mode) doc["sweep"]["mode"] = *o.sweep_mode;
  return doc;
}

void print_summary(std::ostream& out, const RunReport& report) {
  out << report.body.at("mode").get<std::string>();
  if (report.success_prob) out << " success_prob=" << format_number(*report.success_prob);
  if (report.fidelity) out << " fidelity=" << format_number(*report.fidelity);
  if (report.body.contains("effective_model"))
    out << " beta_hz=" << format_number(report.body["coupling"]["beta_hz"].get<double>());
  out << " checksum=" << report.checksum << '\n';
}

int execute(const Overrides& o, const std::string& mode) {
  const ExperimentConfig config = config_from_json(merged_config(o, mode));
  if (config.mode == Mode::Sweep) {
    const SweepResult result = sweep(config);
    if (config.out_dir.empty()) {
      std::cout << result.aggregate_csv;
    } else {
      write_sweep_outputs(result, config.out_dir);
      std::cout << "sweep points=" << result.reports.size() << " out=" << config.out_dir << '\n';
    }
  } else {
    const RunReport report = run(config);
    if (config.out_dir.empty()) {
      std::cout << report_document(report).dump(2) << '\n';
    } else {
      write_run_outputs(report, config.out_dir);
      print_summary(std::cout, report);
    }
    for (const auto& warning : report.body.at("warnings")) std::cerr << "warning: " << warning.get<std::string>() << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Conditional hole burning and Fock-state preparation in a resonator coupled to a charge qubit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Overrides o;
  CLI::App* burn = app.add_subcommand("burn", "burn holes into a coherent state (g detections)");
  add_common_options(*burn, o);
  burn->add_option("--targets", o.targets, "comma-separated hole positions, e.g. 4,1,7");

  CLI::App* fock1 = app.add_subcommand("fock1", "prepare |N> with N e detections");
  CLI::App* fock2 = app.add_subcommand("fock2", "prepare |N> with ceil(N/2) e detections");
  for (CLI::App* cmd : {fock1, fock2}) {
    add_common_options(*cmd, o);
    cmd->add_option("--n", o.n, "target Fock state N");
    cmd->add_option("--search-depth", o.search_depth, "largest integer multiple k_j tried per step");
  }

  CLI::App* device = app.add_subcommand("device", "effective coupling and decoherence budget of a device");
  add_common_options(*device, o);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a grid of experiments over one parameter");
  add_common_options(*sweep_cmd, o);
  sweep_cmd->add_option("--targets", o.targets, "comma-separated hole positions");
  sweep_cmd->add_option("--n", o.n, "target Fock state N");
  sweep_cmd->add_option("--search-depth", o.search_depth, "largest integer multiple k_j tried per step");
  sweep_cmd->add_option("--workers", o.workers, "concurrent grid points");
  sweep_cmd->add_option("--param", o.sweep_param, "parameter to sweep (alpha, beta, n, search_depth, device.<field>, ...)");
  sweep_cmd->add_option("--min", o.sweep_min, "grid start");
  sweep_cmd->add_option("--max", o.sweep_max, "grid end");
  sweep_cmd->add_option("--steps", o.sweep_steps, "grid points");
  sweep_cmd->add_option("--sweep-mode", o.sweep_mode, "experiment run at each point (burn, fock1, fock2, device)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string mode = app.get_subcommands().front()->get_name();
  try {
    return execute(o, mode);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ScheduleSearchError& e) {
    std::cerr << "schedule search failed: " << e.what() << '\n';
    return kExitConfig;
  } catch (const EmptyBranchError& e) {
    std::cerr << "impossible branch: " << e.what() << '\n';
    return kExitEmptyBranch;
  } catch (const BudgetViolation& e) {
    std::cerr << "budget violation: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace holeburn
