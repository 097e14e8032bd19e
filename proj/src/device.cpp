#include "holeburn/device.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holeburn {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0) || !std::isfinite(value))
    throw std::invalid_argument(std::string("DeviceParams: ") + name + " must be finite and > 0");
}

}  // namespace

double flux_quantum(double planck, double charge) { return planck / (2.0 * charge); }

double total_flux(double phi_b, double b_field, double ell, double x) { return phi_b + b_field * ell * x; }

double charging_energy(double c1, double cj0) {
  if (!(c1 >= 0) || !(cj0 > 0)) throw std::invalid_argument("charging_energy: capacitances must be positive");
  return kElementaryCharge * kElementaryCharge / (c1 + 4.0 * cj0) / kReducedPlanck;
}

void DeviceParams::validate() const {
  require_positive(ej0, "ej0");
  require_positive(c1, "c1");
  require_positive(cj0, "cj0");
  require_positive(v1, "v1");
  require_positive(b_field, "b_field");
  require_positive(ell, "ell");
  require_positive(x0, "x0");
  require_positive(omega, "omega");
  if (!std::isfinite(phi_x) || !std::isfinite(phi_b)) throw std::invalid_argument("DeviceParams: non-finite flux");
}

double EffectiveModel::beta() const { return std::abs(lambda0); }

EffectiveModel effective_model(const DeviceParams& params) {
  params.validate();
  const double phi0 = flux_quantum();
  const double pi = std::numbers::pi;
  const double working_point = std::cos(pi * params.phi_b / phi0);
  if (std::abs(working_point) > kWorkingPointTol)
    throw std::domain_error("effective_model: cos(pi Phi_b / Phi_0) = " + std::to_string(working_point) +
                            ", expected 0 (set Phi_b to an odd multiple of Phi_0/2)");

  EffectiveModel model{};
  model.small_angle = pi * params.b_field * params.ell * params.x0 / phi0;
  model.lambda0 = -4.0 * params.ej0 * std::cos(pi * params.phi_x / phi0) * model.small_angle;
  model.ec = charging_energy(params.c1, params.cj0);
  model.n1 = params.c1 * params.v1 / (2.0 * kElementaryCharge);
  model.omega0 = 8.0 * model.ec * (model.n1 - 0.5);
  if (model.small_angle >= kSmallAngleLimit)
    model.warnings.push_back("small_angle " + std::to_string(model.small_angle) +
                             " >= 0.1: linearisation sin(x) ~ x is poor");
  return model;
}

bool is_resonant(const DeviceParams& params, const EffectiveModel& model, double rel_tol) {
  return std::abs(params.omega - model.omega0) <= rel_tol * std::abs(params.omega);
}

DecoherenceBudget decoherence_budget(std::span<const double> taus, double t_qubit, double t_nr) {
  if (!(t_qubit > 0) || !(t_nr > 0)) throw std::invalid_argument("decoherence_budget: lifetimes must be > 0");
  DecoherenceBudget budget{taus.size(), 0, 0.0, std::min(t_qubit, t_nr), 0.0};
  bool within = true;
  for (double tau : taus) {
    budget.total_duration += tau;
    if (within && budget.total_duration < budget.limit)
      ++budget.feasible_steps;
    else
      within = false;
  }
  budget.margin = 1.0 - budget.total_duration / budget.limit;
  return budget;
}

std::size_t uniform_budget(double tau, double t_qubit) {
  if (!(tau > 0) || !(t_qubit > 0)) throw std::invalid_argument("uniform_budget: durations must be > 0");
  return static_cast<std::size_t>(std::floor(t_qubit / tau));
}

}  // namespace holeburn
