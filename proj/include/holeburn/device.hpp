#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace holeburn {

// SI, exact since the 2019 redefinition.
inline constexpr double kPlanck = 6.62607015e-34;             // J s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kReducedPlanck = kPlanck / (2.0 * std::numbers::pi);

inline constexpr double hz_to_angular(double hz) { return 2.0 * std::numbers::pi * hz; }
inline constexpr double angular_to_hz(double rad_per_s) { return rad_per_s / (2.0 * std::numbers::pi); }

/// Superconducting flux quantum h / 2e (Wb).
double flux_quantum(double planck = kPlanck, double charge = kElementaryCharge);

/// External loop flux Phi_b + B l x (Wb).
double total_flux(double phi_b, double b_field, double ell, double x);

/// Charging energy e^2 / (C1 + 4 C_J0), as an angular frequency (rad/s).
double charging_energy(double c1, double cj0);

/// Cooper-pair-box / resonator device. Energies are angular frequencies (rad/s).
struct DeviceParams {
  double ej0 = 0;     // Josephson energy per junction
  double c1 = 0;      // input capacitance (F)
  double cj0 = 0;     // junction capacitance (F)
  double v1 = 0;      // input voltage (V)
  double phi_x = 0;   // tuning flux (Wb)
  double phi_b = 0;   // equilibrium induced flux (Wb)
  double b_field = 0; // loop field (T)
  double ell = 0;     // resonator length (m)
  double x0 = 0;      // zero-point amplitude (m)
  double omega = 0;   // resonator frequency (rad/s)

  void validate() const;
};

struct EffectiveModel {
  double lambda0;      // signed coupling (rad/s)
  double omega0;       // qubit splitting 8 E_c (N1 - 1/2) (rad/s)
  double n1;           // gate charge C1 V1 / 2e
  double ec;           // charging energy (rad/s)
  double small_angle;  // pi B l x0 / Phi_0
  std::vector<std::string> warnings;

  /// Coupling used by the dynamics, beta = -lambda0 (magnitude taken).
  double beta() const;
};

inline constexpr double kWorkingPointTol = 1e-6;
inline constexpr double kSmallAngleLimit = 0.1;

/// Reduces the device to the resonant Jaynes-Cummings parameters. Requires
/// the working point cos(pi Phi_b / Phi_0) = 0; a large small_angle is
/// reported as a warning.
EffectiveModel effective_model(const DeviceParams& params);

/// Resonance omega == omega0 within a relative tolerance.
bool is_resonant(const DeviceParams& params, const EffectiveModel& model, double rel_tol = 1e-3);

struct DecoherenceBudget {
  std::size_t total_steps;
  std::size_t feasible_steps;  // longest prefix with cumulative duration < limit
  double total_duration;
  double limit;                // min(t_qubit, t_nr)
  double margin;               // 1 - total_duration / limit; negative when exceeded

  bool exceeded() const { return feasible_steps < total_steps; }
};

DecoherenceBudget decoherence_budget(std::span<const double> taus, double t_qubit, double t_nr);

/// floor(t_qubit / tau): number of equal steps that fit in the qubit lifetime.
std::size_t uniform_budget(double tau, double t_qubit);

}  // namespace holeburn
