#include "holeburn/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "holeburn/jaynes_cummings.hpp"
#include "holeburn/protocol.hpp"

namespace holeburn {

using nlohmann::json;

namespace {

const std::map<std::string, Mode, std::less<>> kModes = {
    {"burn", Mode::Burn}, {"fock1", Mode::Fock1}, {"fock2", Mode::Fock2},
    {"device", Mode::Device}, {"sweep", Mode::Sweep}};

const std::map<std::string, double, std::less<>> kFrequencyUnits = {
    {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

FrequencySpec frequency_from_json(const json& node, const char* field, bool bare_is_angular) {
  if (node.is_number()) {
    FrequencySpec spec{node.get<double>(), bare_is_angular ? "rad/s" : ""};
    return spec;
  }
  if (node.is_string()) return parse_frequency(node.get<std::string>());
  if (node.is_object()) {
    FrequencySpec spec{node.at("value").get<double>(), node.value("unit", std::string())};
    if (!spec.unit.empty() && spec.unit != "rad/s" && !kFrequencyUnits.contains(spec.unit))
      throw ConfigError(std::string(field) + ": unknown unit '" + spec.unit + "'");
    return spec;
  }
  throw ConfigError(std::string(field) + ": expected number, string or {value, unit}");
}

json frequency_to_json(const FrequencySpec& spec) { return {{"value", spec.value}, {"unit", spec.unit}}; }

// Device fields and their setters; frequencies are stored in rad/s.
using DeviceField = double DeviceParams::*;
const std::map<std::string, DeviceField, std::less<>> kDeviceFields = {
    {"ej0", &DeviceParams::ej0},     {"c1", &DeviceParams::c1},         {"cj0", &DeviceParams::cj0},
    {"v1", &DeviceParams::v1},       {"phi_x", &DeviceParams::phi_x},   {"phi_b", &DeviceParams::phi_b},
    {"b_field", &DeviceParams::b_field}, {"ell", &DeviceParams::ell}, {"x0", &DeviceParams::x0},
    {"omega", &DeviceParams::omega}};

bool is_frequency_field(std::string_view name) { return name == "ej0" || name == "omega"; }
bool is_flux_field(std::string_view name) { return name == "phi_x" || name == "phi_b"; }

DeviceParams device_from_json(const json& node) {
  if (!node.is_object()) throw ConfigError("device: expected an object");
  DeviceParams params;
  for (const auto& [key, value] : node.items()) {
    const auto it = kDeviceFields.find(key);
    if (it == kDeviceFields.end()) throw ConfigError("device: unknown field '" + key + "'");
    double parsed;
    if (is_frequency_field(key)) {
      parsed = frequency_from_json(value, key.c_str(), true).angular();
    } else if (is_flux_field(key) && value.is_object()) {
      parsed = value.at("flux_quanta").get<double>() * flux_quantum();
    } else {
      parsed = value.get<double>();
    }
    params.*(it->second) = parsed;
  }
  return params;
}

json device_to_json(const DeviceParams& params) {
  json out = json::object();
  for (const auto& [key, field] : kDeviceFields) out[key] = params.*field;
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, 16);
  std::string out(buf, end);
  return std::string(16 - out.size(), '0') + out;
}

json conventions(bool physical) {
  return {
      {"frequency_reading", "cyclic: Hz/kHz/MHz/GHz values are multiplied by 2*pi to give rad/s"},
      {"time_unit", physical ? "s" : "1/beta"},
      {"g_closed_form", "P_n ~ (|alpha|^2n/n!) prod_j cos^2(beta sqrt(n+1) tau_j); normaliser summed over its own index m"},
      {"e_closed_form", "step j weights original component n by sin(beta sqrt(n+j) tau_j)"},
      {"fidelity", "population of the target number state in the simulated final state"}};
}

struct ResolvedCoupling {
  double beta;  // rad/s, or 1 when dimensionless
  bool physical;
  std::string source;
  std::optional<EffectiveModel> model;
};

ResolvedCoupling resolve_coupling(const ExperimentConfig& config) {
  if (config.device) {
    EffectiveModel model = effective_model(*config.device);
    if (!(model.beta() > 0)) throw ConfigError("device: coupling is switched off (cos(pi Phi_x / Phi_0) = 0)");
    return {model.beta(), true, "device", std::move(model)};
  }
  if (config.beta) {
    if (config.beta->dimensionless()) return {config.beta->value, false, "beta", std::nullopt};
    return {config.beta->angular(), true, "beta", std::nullopt};
  }
  return {1.0, false, "default", std::nullopt};
}

json coupling_json(const ResolvedCoupling& coupling) {
  json out{{"source", coupling.source}, {"dimensionless", !coupling.physical}};
  if (coupling.physical) {
    out["beta_rad_per_s"] = coupling.beta;
    out["beta_hz"] = angular_to_hz(coupling.beta);
  } else {
    out["beta"] = coupling.beta;
  }
  return out;
}

json schedule_json(const Schedule<double>& schedule) {
  json steps = json::array();
  for (const auto& step : schedule.steps) {
    json item{{"tau", step.tau}, {"outcome", to_string(step.outcome)}};
    item["target_n"] = step.target_n ? json(*step.target_n) : json(nullptr);
    steps.push_back(std::move(item));
  }
  return steps;
}

json budget_json(const DecoherenceBudget& budget, double t_qubit, double t_nr) {
  return {{"applicable", true},
          {"t_qubit", t_qubit},
          {"t_nr", t_nr},
          {"limit", budget.limit},
          {"total_duration", budget.total_duration},
          {"total_steps", budget.total_steps},
          {"feasible_steps", budget.feasible_steps},
          {"margin", budget.margin},
          {"exceeded", budget.exceeded()}};
}

void fill_protocol(RunReport& report, const ExperimentConfig& config, const ResolvedCoupling& coupling,
                   const Schedule<double>& schedule, const ProtocolResult<double>& result,
                   double closed_form_success) {
  json& body = report.body;
  body["schedule"] = schedule_json(schedule);
  body["total_duration"] = schedule.total_duration();
  body["step_probs"] = result.step_probs;
  body["success_prob"] = result.success_prob;
  body["success_prob_closed_form"] = closed_form_success;
  body["distribution"] = std::vector<double>(result.distribution.p.begin(), result.distribution.p.end());
  body["fidelity"] = result.fidelity ? json(*result.fidelity) : json(nullptr);
  report.distribution = result.distribution;
  report.success_prob = result.success_prob;
  report.fidelity = result.fidelity;

  if (!coupling.physical) {
    body["budget"] = {{"applicable", false}, {"reason", "durations are in units of 1/beta"}};
    return;
  }
  const std::vector<double> taus = schedule.taus();
  const DecoherenceBudget budget = decoherence_budget(taus, config.t_qubit, config.t_nr);
  body["budget"] = budget_json(budget, config.t_qubit, config.t_nr);
  report.budget_exceeded = budget.exceeded();
  if (budget.exceeded()) {
    const std::string message = "schedule duration " + format_number(budget.total_duration) +
                                " s exceeds decoherence limit " + format_number(budget.limit) + " s";
    if (config.strict_budget) throw BudgetViolation(message);
    body["warnings"].push_back(message);
  }
}

void run_device(RunReport& report, const ExperimentConfig& config, const ResolvedCoupling& coupling) {
  const EffectiveModel& model = *coupling.model;
  const CouplingParams<double> params(coupling.beta);
  const double tau0 = hole_time<double>(0, params);
  const bool resonant = is_resonant(*config.device, model);
  json& body = report.body;
  body["effective_model"] = {{"lambda0_rad_per_s", model.lambda0},
                             {"lambda0_hz", angular_to_hz(model.lambda0)},
                             {"omega0_rad_per_s", model.omega0},
                             {"omega0_hz", angular_to_hz(model.omega0)},
                             {"n1", model.n1},
                             {"ec_rad_per_s", model.ec},
                             {"ec_hz", angular_to_hz(model.ec)},
                             {"small_angle", model.small_angle},
                             {"flux_quantum_wb", flux_quantum()},
                             {"resonant", resonant}};
  body["hole_time"] = {{"computed_n0_s", tau0},
                       {"nominal_s", config.nominal_hole_time},
                       {"holes_in_qubit_lifetime_computed", uniform_budget(tau0, config.t_qubit)},
                       {"holes_in_qubit_lifetime_nominal", uniform_budget(config.nominal_hole_time, config.t_qubit)},
                       {"t_qubit", config.t_qubit},
                       {"t_nr", config.t_nr}};
  for (const auto& warning : model.warnings) body["warnings"].push_back(warning);
  if (!resonant)
    body["warnings"].push_back("resonator frequency " + format_number(config.device->omega) +
                               " rad/s differs from qubit splitting " + format_number(model.omega0) + " rad/s");
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void set_sweep_parameter(ExperimentConfig& config, std::string_view name, double value) {
  if (name == "alpha") {
    config.alpha = value;
  } else if (name == "alpha_phase") {
    config.alpha_phase = value;
  } else if (name == "beta") {
    if (!config.beta) config.beta = FrequencySpec{};
    config.beta->value = value;
  } else if (name == "search_depth") {
    config.search_depth = static_cast<int>(std::lround(value));
  } else if (name == "n") {
    config.n = std::lround(value);
  } else if (name == "tail_tol") {
    config.tail_tol = value;
  } else if (name == "t_qubit") {
    config.t_qubit = value;
  } else if (name == "t_nr") {
    config.t_nr = value;
  } else if (name.starts_with("device.")) {
    const auto it = kDeviceFields.find(name.substr(7));
    if (it == kDeviceFields.end() || !config.device) throw ConfigError("sweep: unknown parameter '" + std::string(name) + "'");
    (*config.device).*(it->second) = value;
  } else {
    throw ConfigError("sweep: unknown parameter '" + std::string(name) + "'");
  }
}

}  // namespace

Mode parse_mode(std::string_view name) {
  const auto it = kModes.find(name);
  if (it == kModes.end()) throw ConfigError("unknown mode '" + std::string(name) + "'");
  return it->second;
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::Burn: return "burn";
    case Mode::Fock1: return "fock1";
    case Mode::Fock2: return "fock2";
    case Mode::Device: return "device";
    case Mode::Sweep: return "sweep";
  }
  return "?";
}

double FrequencySpec::angular() const {
  if (unit.empty()) throw ConfigError("frequency has no unit");
  if (unit == "rad/s") return value;
  const auto it = kFrequencyUnits.find(unit);
  if (it == kFrequencyUnits.end()) throw ConfigError("unknown frequency unit '" + unit + "'");
  return hz_to_angular(value * it->second);
}

FrequencySpec parse_frequency(std::string_view text) {
  const std::string_view s = trim(text);
  FrequencySpec spec;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), spec.value);
  if (ec != std::errc() || !std::isfinite(spec.value))
    throw ConfigError("cannot parse frequency '" + std::string(text) + "'");
  spec.unit = std::string(trim(std::string_view(ptr, static_cast<std::size_t>(s.data() + s.size() - ptr))));
  if (!spec.unit.empty() && spec.unit != "rad/s" && !kFrequencyUnits.contains(spec.unit))
    throw ConfigError("unknown frequency unit '" + spec.unit + "' (use Hz, kHz, MHz, GHz or rad/s)");
  return spec;
}

ExperimentConfig config_from_json(const json& doc) {
  static const std::set<std::string, std::less<>> known = {
      "mode", "alpha", "beta", "targets", "n", "search_depth", "tail_tol", "device",
      "sweep", "budget", "output", "workers"};
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw ConfigError("config: unknown field '" + key + "'");

  ExperimentConfig config;
  try {
    if (doc.contains("mode")) config.mode = parse_mode(doc.at("mode").get<std::string>());
    if (doc.contains("alpha")) {
      const json& alpha = doc.at("alpha");
      if (alpha.is_object()) {
        config.alpha = alpha.at("modulus").get<double>();
        config.alpha_phase = alpha.value("phase", 0.0);
      } else {
        config.alpha = alpha.get<double>();
      }
    }
    if (doc.contains("beta")) config.beta = frequency_from_json(doc.at("beta"), "beta", false);
    if (doc.contains("targets")) config.targets = doc.at("targets").get<std::vector<Index>>();
    if (doc.contains("n")) config.n = doc.at("n").get<Index>();
    if (doc.contains("search_depth")) config.search_depth = doc.at("search_depth").get<int>();
    if (doc.contains("tail_tol")) config.tail_tol = doc.at("tail_tol").get<double>();
    if (doc.contains("device")) config.device = device_from_json(doc.at("device"));
    if (doc.contains("sweep")) {
      const json& sweep = doc.at("sweep");
      SweepSpec spec;
      spec.parameter = sweep.at("parameter").get<std::string>();
      spec.min = sweep.at("min").get<double>();
      spec.max = sweep.value("max", spec.min);
      spec.steps = sweep.value("steps", 1);
      spec.mode = parse_mode(sweep.at("mode").get<std::string>());
      config.sweep = spec;
    }
    if (doc.contains("budget")) {
      const json& budget = doc.at("budget");
      config.t_qubit = budget.value("t_qubit", config.t_qubit);
      config.t_nr = budget.value("t_nr", config.t_nr);
      config.nominal_hole_time = budget.value("nominal_hole_time", config.nominal_hole_time);
      config.strict_budget = budget.value("strict", config.strict_budget);
    }
    if (doc.contains("output")) config.out_dir = doc.at("output").value("dir", std::string());
    if (doc.contains("workers")) config.workers = doc.at("workers").get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

json config_to_json(const ExperimentConfig& config) {
  json out{{"mode", to_string(config.mode)},
           {"alpha", {{"modulus", config.alpha}, {"phase", config.alpha_phase}}},
           {"tail_tol", config.tail_tol},
           {"budget",
            {{"t_qubit", config.t_qubit},
             {"t_nr", config.t_nr},
             {"nominal_hole_time", config.nominal_hole_time},
             {"strict", config.strict_budget}}}};
  if (config.beta) out["beta"] = frequency_to_json(*config.beta);
  if (config.device) out["device"] = device_to_json(*config.device);
  switch (config.mode) {
    case Mode::Burn: out["targets"] = config.targets; break;
    case Mode::Fock1:
    case Mode::Fock2:
      out["n"] = config.n;
      out["search_depth"] = config.search_depth;
      break;
    case Mode::Sweep:
      out["targets"] = config.targets;
      out["n"] = config.n;
      out["search_depth"] = config.search_depth;
      break;
    case Mode::Device: break;
  }
  if (config.sweep)
    out["sweep"] = {{"parameter", config.sweep->parameter},
                    {"min", config.sweep->min},
                    {"max", config.sweep->max},
                    {"steps", config.sweep->steps},
                    {"mode", to_string(config.sweep->mode)}};
  return out;
}

void validate(const ExperimentConfig& config) {
  if (!std::isfinite(config.alpha) || config.alpha < 0) throw ConfigError("alpha modulus must be finite and >= 0");
  if (!std::isfinite(config.alpha_phase)) throw ConfigError("alpha phase must be finite");
  if (!(config.tail_tol > 0) || config.tail_tol > 1e-6) throw ConfigError("tail_tol must lie in (0, 1e-6]");
  if (config.beta && config.device) throw ConfigError("give either beta or a device block, not both");
  if (config.beta && (!(config.beta->value > 0) || !std::isfinite(config.beta->value)))
    throw ConfigError("beta must be finite and > 0");
  if (!(config.t_qubit > 0) || !(config.t_nr > 0) || !(config.nominal_hole_time > 0))
    throw ConfigError("budget times must be > 0");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.device) {
    try {
      config.device->validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  switch (config.mode) {
    case Mode::Burn: {
      if (config.targets.empty()) throw ConfigError("burn: targets must not be empty");
      std::set<Index> seen;
      for (Index n : config.targets) {
        if (n < 0) throw ConfigError("burn: targets must be >= 0");
        if (!seen.insert(n).second) throw ConfigError("burn: duplicate target " + std::to_string(n));
      }
      break;
    }
    case Mode::Fock1:
      if (config.n < 1 || config.n > 5) throw ConfigError("fock1: n must lie in [1, 5]");
      if (config.search_depth < 1) throw ConfigError("search_depth must be >= 1");
      break;
    case Mode::Fock2:
      if (config.n < 2 || config.n > 8) throw ConfigError("fock2: n must lie in [2, 8]");
      if (config.search_depth < 1) throw ConfigError("search_depth must be >= 1");
      break;
    case Mode::Device:
      if (!config.device) throw ConfigError("device: a device block is required");
      break;
    case Mode::Sweep: {
      if (!config.sweep) throw ConfigError("sweep: a sweep block is required");
      const SweepSpec& spec = *config.sweep;
      if (spec.mode == Mode::Sweep) throw ConfigError("sweep: nested sweeps are not supported");
      if (spec.steps < 1) throw ConfigError("sweep: steps must be >= 1");
      if (!std::isfinite(spec.min) || !std::isfinite(spec.max)) throw ConfigError("sweep: non-finite range");
      validate(sweep_point(config, spec.min));
      validate(sweep_point(config, spec.max));
      break;
    }
  }
}

RunReport run(const ExperimentConfig& config) {
  validate(config);
  if (config.mode == Mode::Sweep) throw ConfigError("run: use sweep() for sweep configurations");

  RunReport report;
  try {
    const ResolvedCoupling coupling = resolve_coupling(config);
    json& body = report.body;
    body["software_version"] = kVersion;
    body["mode"] = to_string(config.mode);
    body["config"] = config_to_json(config);
    body["conventions"] = conventions(coupling.physical);
    body["coupling"] = coupling_json(coupling);
    body["warnings"] = json::array();

    const CouplingParams<double> params(coupling.beta);
    const std::complex<double> alpha = config.alpha_complex();
    switch (config.mode) {
      case Mode::Burn: {
        const ProtocolResult<double> result = burn_holes(alpha, config.targets, params, config.tail_tol);
        const Schedule<double> schedule = hole_schedule(config.targets, params);
        const double closed = success_probability_closed_form(alpha, schedule.taus(), params,
                                                              auto_dim(alpha, 0, config.tail_tol));
        fill_protocol(report, config, coupling, schedule, result, closed);
        break;
      }
      case Mode::Fock1:
      case Mode::Fock2: {
        const FockPreparation<double> prep =
            config.mode == Mode::Fock1
                ? prep_fock_strategy1(config.n, alpha, params, config.search_depth, config.tail_tol)
                : prep_fock_strategy2(config.n, alpha, params, config.search_depth, config.tail_tol);
        const double closed = prep_success_probability(alpha, prep.schedule.taus(), params,
                                                       auto_dim(alpha, 0, config.tail_tol));
        fill_protocol(report, config, coupling, prep.schedule, prep.result, closed);
        break;
      }
      case Mode::Device: run_device(report, config, coupling); break;
      case Mode::Sweep: break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }

  report.checksum = hex64(fnv1a(report.body.dump()));
  return report;
}

ExperimentConfig sweep_point(const ExperimentConfig& config, double value) {
  if (!config.sweep) throw ConfigError("sweep_point: no sweep block");
  ExperimentConfig point = config;
  point.mode = config.sweep->mode;
  point.sweep.reset();
  set_sweep_parameter(point, config.sweep->parameter, value);
  return point;
}

SweepResult sweep(const ExperimentConfig& config) {
  if (config.mode != Mode::Sweep) throw ConfigError("sweep: config mode must be 'sweep'");
  validate(config);
  const SweepSpec& spec = *config.sweep;

  SweepResult out;
  out.parameter = spec.parameter;
  for (int i = 0; i < spec.steps; ++i)
    out.grid.push_back(spec.steps == 1 ? spec.min : spec.min + (spec.max - spec.min) * i / (spec.steps - 1));

  const std::size_t count = out.grid.size();
  std::vector<std::optional<RunReport>> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = run(sweep_point(config, out.grid[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(config.workers), count);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  std::string csv = "param,success_prob,fidelity\n";
  for (std::size_t i = 0; i < count; ++i) {
    RunReport& report = *reports[i];
    csv += format_number(out.grid[i]) + ',';
    if (report.success_prob) csv += format_number(*report.success_prob);
    csv += ',';
    if (report.fidelity) csv += format_number(*report.fidelity);
    csv += '\n';
    out.reports.push_back(std::move(report));
  }
  out.aggregate_csv = std::move(csv);
  return out;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, end);
}

std::string distribution_csv(const NumberDistribution<double>& dist) {
  std::string out = "n,p\n";
  for (Index n = 0; n < dist.dim(); ++n) out += std::to_string(n) + ',' + format_number(dist[n]) + '\n';
  return out;
}

void emit_distribution(const NumberDistribution<double>& dist, const std::filesystem::path& path) {
  write_file_atomic(path, distribution_csv(dist));
}

json report_document(const RunReport& report) {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {{"body", report.body}, {"checksum", report.checksum}, {"generated_at", stamp}};
}

void write_run_outputs(const RunReport& report, const std::filesystem::path& dir) {
  write_file_atomic(dir / "report.json", report_document(report).dump(2) + '\n');
  if (report.distribution) emit_distribution(*report.distribution, dir / "distribution.csv");
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir) {
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    std::string name = std::to_string(i);
    name = "point_" + std::string(name.size() < 3 ? 3 - name.size() : 0, '0') + name;
    write_run_outputs(result.reports[i], dir / name);
  }
  write_file_atomic(dir / "sweep.csv", result.aggregate_csv);
}

}  // namespace holeburn
