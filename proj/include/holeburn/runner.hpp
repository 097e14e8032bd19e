#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "holeburn/device.hpp"
#include "holeburn/fock.hpp"

namespace holeburn {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the command-line runner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitEmptyBranch = 3;
inline constexpr int kExitBudget = 4;

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class BudgetViolation : public std::runtime_error {
 public:
  explicit BudgetViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class Mode { Burn, Fock1, Fock2, Device, Sweep };

Mode parse_mode(std::string_view name);
const char* to_string(Mode mode);

/// A frequency with its unit tag. Hz/kHz/MHz/GHz are cyclic and get a 2 pi
/// factor; "rad/s" is taken as is; an empty unit means dimensionless.
struct FrequencySpec {
  double value = 1.0;
  std::string unit;

  bool dimensionless() const { return unit.empty(); }
  double angular() const;
};

/// Parses "45MHz", "2.8e8 rad/s", "1" and the like.
FrequencySpec parse_frequency(std::string_view text);

struct SweepSpec {
  std::string parameter;
  double min = 0;
  double max = 0;
  int steps = 1;
  Mode mode = Mode::Burn;
};

struct ExperimentConfig {
  Mode mode = Mode::Burn;
  double alpha = 0.0;
  double alpha_phase = 0.0;
  std::optional<FrequencySpec> beta;
  std::vector<Index> targets;
  Index n = 0;
  int search_depth = 8;
  double tail_tol = kDefaultTailTol;
  std::optional<DeviceParams> device;
  std::optional<SweepSpec> sweep;
  double t_qubit = 500e-9;
  double t_nr = 160e-6;
  double nominal_hole_time = 0.3e-9;
  bool strict_budget = false;
  std::string out_dir;
  int workers = 1;

  std::complex<double> alpha_complex() const { return std::polar(alpha, alpha_phase); }
};

ExperimentConfig config_from_json(const nlohmann::json& doc);
/// Experiment-defining fields only (no output directory or worker count).
nlohmann::json config_to_json(const ExperimentConfig& config);
void validate(const ExperimentConfig& config);

struct RunReport {
  nlohmann::json body;
  std::string checksum;  // FNV-1a 64 of body.dump()
  std::optional<NumberDistribution<double>> distribution;
  std::optional<double> success_prob;
  std::optional<double> fidelity;
  bool budget_exceeded = false;
};

/// Executes a single burn / fock1 / fock2 / device experiment. No file I/O.
RunReport run(const ExperimentConfig& config);

struct SweepResult {
  std::string parameter;
  std::vector<double> grid;
  std::vector<RunReport> reports;
  std::string aggregate_csv;  // param,success_prob,fidelity
};

/// One independent run per grid point, on up to config.workers threads.
SweepResult sweep(const ExperimentConfig& config);

/// Point configuration used by sweep() for grid value `value`.
ExperimentConfig sweep_point(const ExperimentConfig& config, double value);

/// 12 significant digits, '.' decimal separator, no locale.
std::string format_number(double value);

/// "n,p\n" header then one row per basis level.
std::string distribution_csv(const NumberDistribution<double>& dist);
void emit_distribution(const NumberDistribution<double>& dist, const std::filesystem::path& path);

/// {"body", "checksum", "generated_at"}; the timestamp is the only
/// non-deterministic field.
nlohmann::json report_document(const RunReport& report);
void write_run_outputs(const RunReport& report, const std::filesystem::path& dir);
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& dir);

/// Entry point of the `holeburn` command-line tool.
int cli_main(int argc, char** argv);

}  // namespace holeburn
