#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holeburn/errors.hpp"
#include "holeburn/fock.hpp"
#include "holeburn/jaynes_cummings.hpp"

namespace holeburn {

template <typename Scalar = double>
struct ScheduleStep {
  Scalar tau;
  // Hole burning: the number state nulled by this step. Fock preparation:
  // the original coherent component nulled by this step.
  std::optional<Index> target_n;
  QubitOutcome outcome;
};

/// Ordered interaction times and the detection outcome post-selected after each.
template <typename Scalar = double>
struct Schedule {
  std::vector<ScheduleStep<Scalar>> steps;

  Index size() const { return static_cast<Index>(steps.size()); }

  std::vector<Scalar> taus() const {
    std::vector<Scalar> out;
    out.reserve(steps.size());
    for (const auto& step : steps) out.push_back(step.tau);
    return out;
  }

  Scalar total_duration() const {
    Scalar total(0);
    for (const auto& step : steps) total += step.tau;
    return total;
  }

  void validate() const {
    for (const auto& step : steps) {
      if (!(step.tau > Scalar(0)) || !std::isfinite(step.tau))
        throw std::invalid_argument("Schedule: every tau must be finite and > 0");
      if (step.outcome != steps.front().outcome)
        throw std::invalid_argument("Schedule: mixed detection outcomes");
    }
  }
};

template <typename Scalar = double>
struct ProtocolResult {
  FockVector<Scalar> final_state;  // normalized
  std::vector<Scalar> step_probs;
  Scalar success_prob;
  NumberDistribution<Scalar> distribution;
  std::optional<Scalar> fidelity;
};

template <typename Scalar = double>
struct FockPreparation {
  Schedule<Scalar> schedule;
  ProtocolResult<Scalar> result;
};

/// Runs the schedule step by step with a fresh |g> qubit each round.
template <typename Scalar>
ProtocolResult<Scalar> run_schedule(const FockVector<Scalar>& initial, const Schedule<Scalar>& schedule,
                                    const CouplingParams<Scalar>& params) {
  schedule.validate();
  std::vector<Scalar> step_probs;
  step_probs.reserve(schedule.steps.size());
  Scalar success(1);
  FockVector<Scalar> state = initial;
  for (const auto& step : schedule.steps) {
    Branch<Scalar> branch = conditional_step(state, params, step.tau, step.outcome);
    step_probs.push_back(branch.probability);
    success *= branch.probability;
    state = std::move(branch.state);
  }
  if (schedule.steps.empty()) state = normalize(state).state;
  NumberDistribution<Scalar> dist = number_distribution(state);
  return {std::move(state), std::move(step_probs), success, std::move(dist), std::nullopt};
}

/// Interaction time that nulls |target_n> on a g detection: beta sqrt(n+1) tau = pi/2.
template <typename Scalar>
Scalar hole_time(Index target_n, const CouplingParams<Scalar>& params) {
  using std::sqrt;
  if (target_n < 0) throw std::invalid_argument("hole_time: target_n must be >= 0");
  return std::numbers::pi_v<Scalar> / (Scalar(2) * params.beta * sqrt(Scalar(target_n + 1)));
}

template <typename Scalar>
Schedule<Scalar> hole_schedule(const std::vector<Index>& targets, const CouplingParams<Scalar>& params) {
  Schedule<Scalar> schedule;
  for (Index n : targets) schedule.steps.push_back({hole_time(n, params), n, QubitOutcome::G});
  return schedule;
}

/// Burns holes at `targets` (in the given order) into |alpha> via repeated
/// g detections.
template <typename Scalar>
ProtocolResult<Scalar> burn_holes(std::complex<Scalar> alpha, const std::vector<Index>& targets,
                                  const CouplingParams<Scalar>& params,
                                  Scalar tail_tol = Scalar(kDefaultTailTol)) {
  const FockVector<Scalar> initial = coherent_state(alpha, tail_tol);
  std::set<Index> seen;
  for (Index n : targets) {
    if (n < 0 || n >= initial.dim())
      throw std::invalid_argument("burn_holes: target " + std::to_string(n) + " outside basis of size " +
                                  std::to_string(initial.dim()));
    if (!seen.insert(n).second) throw std::invalid_argument("burn_holes: duplicate target " + std::to_string(n));
  }
  return run_schedule(initial, hole_schedule(targets, params), params);
}

namespace detail {

template <typename Scalar>
RealVector<Scalar> log_poisson_weights(std::complex<Scalar> alpha, Index dim) {
  RealVector<Scalar> out(dim);
  const Scalar abs2 = std::norm(alpha);
  for (Index n = 0; n < dim; ++n) out(n) = log_poisson_numerator(abs2, n);
  return out;
}

template <typename Scalar>
Index resolve_dim(std::complex<Scalar> alpha, Index dim) {
  return dim > 0 ? dim : auto_dim(alpha, 0, Scalar(kDefaultTailTol));
}

// prod_j cos^2(beta sqrt(m+1) tau_j), per m.
template <typename Scalar>
RealVector<Scalar> g_multipliers(const std::vector<Scalar>& taus, const CouplingParams<Scalar>& params, Index dim) {
  using std::cos;
  RealVector<Scalar> out = RealVector<Scalar>::Ones(dim);
  for (Index m = 0; m < dim; ++m)
    for (Scalar tau : taus) {
      const Scalar c = cos(rabi_frequency(params, m) * tau);
      out(m) *= c * c;
    }
  return out;
}

// prod_{j=1..M} sin(beta sqrt(n+j) tau_j), per original component n.
template <typename Scalar>
RealVector<Scalar> e_sine_products(const std::vector<Scalar>& taus, const CouplingParams<Scalar>& params, Index dim) {
  using std::sin;
  RealVector<Scalar> out = RealVector<Scalar>::Ones(dim);
  for (Index n = 0; n < dim; ++n)
    for (std::size_t j = 0; j < taus.size(); ++j)
      out(n) *= sin(rabi_frequency(params, n + static_cast<Index>(j)) * taus[j]);
  return out;
}

template <typename Scalar>
RealVector<Scalar> exp_shifted(const RealVector<Scalar>& log_w) {
  const Scalar top = log_w.maxCoeff();
  return (log_w.array() - top).exp().matrix();
}

}  // namespace detail

/// P_n after g detections at times `taus`, in closed form:
///   P_n = (|alpha|^{2n}/n!) prod_j cos^2(beta sqrt(n+1) tau_j) / sum_m (same at m).
template <typename Scalar>
NumberDistribution<Scalar> holes_distribution_closed_form(std::complex<Scalar> alpha, const std::vector<Scalar>& taus,
                                                          const CouplingParams<Scalar>& params, Index dim = 0) {
  if (taus.empty()) throw std::invalid_argument("holes_distribution_closed_form: empty schedule");
  dim = detail::resolve_dim(alpha, dim);
  const RealVector<Scalar> w =
      detail::exp_shifted(detail::log_poisson_weights(alpha, dim)).cwiseProduct(detail::g_multipliers(taus, params, dim));
  const Scalar total = w.sum();
  if (!(total > Scalar(0))) throw EmptyBranchError("holes_distribution_closed_form: every component nulled");
  return {w / total};
}

/// Joint probability of detecting g after every step:
///   P_s = e^{-|alpha|^2} sum_m (|alpha|^{2m}/m!) prod_j cos^2(beta sqrt(m+1) tau_j).
template <typename Scalar>
Scalar success_probability_closed_form(std::complex<Scalar> alpha, const std::vector<Scalar>& taus,
                                       const CouplingParams<Scalar>& params, Index dim = 0) {
  using std::exp;
  dim = detail::resolve_dim(alpha, dim);
  const RealVector<Scalar> log_w = detail::log_poisson_weights(alpha, dim).array() - std::norm(alpha);
  return log_w.array().exp().matrix().cwiseProduct(detail::g_multipliers(taus, params, dim)).sum();
}

/// Resonator state after M e detections, in closed form. Original component n
/// lands on |n+M> with amplitude proportional to
///   (alpha^n / sqrt(n!)) (-i)^M prod_{j=1..M} sin(beta sqrt(n+j) tau_j).
/// `dim` counts original components; the result has dim + M levels.
template <typename Scalar>
FockVector<Scalar> e_detection_amplitudes_closed_form(std::complex<Scalar> alpha, const std::vector<Scalar>& taus,
                                                      const CouplingParams<Scalar>& params, Index dim = 0,
                                                      Scalar tail_tol = Scalar(kDefaultTailTol)) {
  using std::exp;
  using std::polar;
  if (taus.empty()) throw std::invalid_argument("e_detection_amplitudes_closed_form: empty schedule");
  dim = detail::resolve_dim(alpha, dim);
  const Index shift = static_cast<Index>(taus.size());
  const RealVector<Scalar> magnitude = detail::exp_shifted(detail::log_poisson_weights(alpha, dim)).cwiseSqrt();
  const RealVector<Scalar> sines = detail::e_sine_products(taus, params, dim);
  const Scalar phase = std::arg(alpha);

  std::complex<Scalar> global(1);
  for (Index j = 0; j < shift; ++j) global *= std::complex<Scalar>(0, -1);

  ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(dim + shift);
  for (Index n = 0; n < dim; ++n)
    amps(n + shift) = global * polar(magnitude(n) * sines(n), Scalar(n) * phase);
  const Scalar norm = amps.norm();
  if (!(norm > Scalar(0))) throw EmptyBranchError("e_detection_amplitudes_closed_form: every component nulled");
  return FockVector<Scalar>(amps / norm, tail_tol);
}

/// Joint probability of detecting e after every step:
///   P'_s = e^{-|alpha|^2} sum_m (|alpha|^{2m}/m!) prod_j sin^2(beta sqrt(m+j) tau_j).
template <typename Scalar>
Scalar prep_success_probability(std::complex<Scalar> alpha, const std::vector<Scalar>& taus,
                                const CouplingParams<Scalar>& params, Index dim = 0) {
  dim = detail::resolve_dim(alpha, dim);
  const RealVector<Scalar> log_w = detail::log_poisson_weights(alpha, dim).array() - std::norm(alpha);
  return log_w.array().exp().matrix().cwiseProduct(detail::e_sine_products(taus, params, dim).cwiseAbs2()).sum();
}

inline constexpr int kDefaultSearchDepth = 8;
inline constexpr double kMinPrepFidelity = 0.95;

namespace detail {

// Exhaustive search over schedules of M e-detections where step j nulls the
// original component kill[j] exactly: tau_j = k_j pi / (beta sqrt(kill[j] + j + 1)),
// k_j in [1, depth]. Maximizes P_target, ties go to the shorter schedule.
template <typename Scalar>
FockPreparation<Scalar> search_e_schedule(std::complex<Scalar> alpha, Index target_n,
                                          const std::vector<std::vector<Index>>& assignments,
                                          const CouplingParams<Scalar>& params, int search_depth, Scalar tail_tol) {
  using std::sqrt;
  if (search_depth < 1) throw std::invalid_argument("search_depth must be >= 1");
  const FockVector<Scalar> initial = coherent_state(alpha, tail_tol);
  const Index dim = initial.dim();
  const RealVector<Scalar> weights = exp_shifted(log_poisson_weights(alpha, dim));
  const Scalar pi = std::numbers::pi_v<Scalar>;

  Scalar best_fidelity(-1);
  Scalar best_duration = std::numeric_limits<Scalar>::infinity();
  std::vector<Scalar> best_taus;
  std::vector<Index> best_kill;

  for (const auto& kill : assignments) {
    const std::size_t steps = kill.size();
    const Index kept = target_n - static_cast<Index>(steps);
    std::vector<int> k(steps, 1);
    std::vector<Scalar> taus(steps);
    while (true) {
      for (std::size_t j = 0; j < steps; ++j)
        taus[j] = Scalar(k[j]) * pi / (params.beta * sqrt(Scalar(kill[j] + static_cast<Index>(j) + 1)));
      const RealVector<Scalar> w = weights.cwiseProduct(e_sine_products(taus, params, dim).cwiseAbs2());
      const Scalar total = w.sum();
      if (total > Scalar(0) && kept < dim) {
        const Scalar fidelity = w(kept) / total;
        Scalar duration(0);
        for (Scalar tau : taus) duration += tau;
        if (fidelity > best_fidelity || (fidelity == best_fidelity && duration < best_duration)) {
          best_fidelity = fidelity;
          best_duration = duration;
          best_taus = taus;
          best_kill = kill;
        }
      }
      std::size_t pos = 0;
      while (pos < steps && k[pos] == search_depth) k[pos++] = 1;
      if (pos == steps) break;
      ++k[pos];
    }
  }
  if (best_taus.empty()) throw ScheduleSearchError("schedule search found no admissible schedule");

  Schedule<Scalar> schedule;
  for (std::size_t j = 0; j < best_taus.size(); ++j) schedule.steps.push_back({best_taus[j], best_kill[j], QubitOutcome::E});
  ProtocolResult<Scalar> result = run_schedule(initial, schedule, params);
  result.fidelity = fidelity_to_fock(result.final_state, target_n);
  if (*result.fidelity < Scalar(kMinPrepFidelity))
    throw ScheduleSearchError("Fock |" + std::to_string(target_n) + "> reached fidelity " +
                              std::to_string(static_cast<double>(*result.fidelity)) +
                              " < 0.95; raise search_depth or lower alpha");
  return {std::move(schedule), std::move(result)};
}

}  // namespace detail

/// Prepares |N> with N e detections. Every detection shifts the state up by
/// one, so the vacuum component ends on |N>. Step j nulls the original
/// component n = j; what remains is the weak n > N tail. The integer
/// multiples k_j are searched for the best final fidelity.
template <typename Scalar>
FockPreparation<Scalar> prep_fock_strategy1(Index n_target, std::complex<Scalar> alpha,
                                            const CouplingParams<Scalar>& params,
                                            int search_depth = kDefaultSearchDepth,
                                            Scalar tail_tol = Scalar(kDefaultTailTol)) {
  if (n_target < 1 || n_target > 5) throw std::invalid_argument("prep_fock_strategy1: N must lie in [1, 5]");
  std::vector<Index> kill(static_cast<std::size_t>(n_target));
  for (Index j = 0; j < n_target; ++j) kill[static_cast<std::size_t>(j)] = j + 1;
  return detail::search_e_schedule(alpha, n_target, {kill}, params, search_depth, tail_tol);
}

/// Prepares |N> with M = ceil(N/2) e detections: the original component
/// N - M is kept, every component below it is nulled (for odd N the spare
/// step nulls N - M + 1). Both the step assignment and k_j are searched.
template <typename Scalar>
FockPreparation<Scalar> prep_fock_strategy2(Index n_target, std::complex<Scalar> alpha,
                                            const CouplingParams<Scalar>& params,
                                            int search_depth = kDefaultSearchDepth,
                                            Scalar tail_tol = Scalar(kDefaultTailTol)) {
  if (n_target < 2 || n_target > 8) throw std::invalid_argument("prep_fock_strategy2: N must lie in [2, 8]");
  const Index steps = (n_target + 1) / 2;
  const Index kept = n_target - steps;
  std::vector<Index> components;
  for (Index n = 0; n < kept; ++n) components.push_back(n);
  if (static_cast<Index>(components.size()) < steps) components.push_back(kept + 1);

  std::vector<std::vector<Index>> assignments;
  std::vector<Index> perm = components;  // sorted ascending
  do assignments.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return detail::search_e_schedule(alpha, n_target, assignments, params, search_depth, tail_tol);
}

}  // namespace holeburn
