#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "holeburn/errors.hpp"
#include "holeburn/fock.hpp"

namespace holeburn {

enum class QubitOutcome { G, E };

inline const char* to_string(QubitOutcome outcome) { return outcome == QubitOutcome::G ? "g" : "e"; }

/// Resonant Jaynes-Cummings coupling beta (rad/s, or 1 for time in units of 1/beta).
template <typename Scalar = double>
struct CouplingParams {
  Scalar beta;

  explicit CouplingParams(Scalar beta_ = Scalar(1)) : beta(beta_) {
    if (!(beta > Scalar(0)) || !std::isfinite(beta))
      throw std::invalid_argument("CouplingParams: beta must be finite and > 0");
  }
};

/// Qubit (x) resonator amplitudes over |g,n> and |e,n>, sharing one basis size.
template <typename Scalar = double>
class JointState {
 public:
  JointState(ComplexVector<Scalar> g_amps, ComplexVector<Scalar> e_amps,
             Scalar tail_tol = Scalar(kDefaultTailTol))
      : g_(std::move(g_amps)), e_(std::move(e_amps)), tail_tol_(tail_tol) {
    if (g_.size() != e_.size()) throw std::invalid_argument("JointState: sector size mismatch");
    if (g_.size() < 1) throw std::invalid_argument("JointState: empty basis");
    if (!g_.allFinite() || !e_.allFinite()) throw std::invalid_argument("JointState: non-finite amplitude");
  }

  const ComplexVector<Scalar>& g_amps() const { return g_; }
  const ComplexVector<Scalar>& e_amps() const { return e_; }
  Index dim() const { return g_.size(); }
  Scalar tail_tol() const { return tail_tol_; }
  Scalar squared_norm() const { return g_.squaredNorm() + e_.squaredNorm(); }

 private:
  ComplexVector<Scalar> g_;
  ComplexVector<Scalar> e_;
  Scalar tail_tol_;
};

/// omega_n = beta * sqrt(n + 1), the rate of the {|g,n>, |e,n+1>} doublet.
template <typename Scalar>
Scalar rabi_frequency(const CouplingParams<Scalar>& params, Index n) {
  using std::sqrt;
  if (n < 0) throw std::invalid_argument("rabi_frequency: n must be >= 0");
  return params.beta * sqrt(Scalar(n + 1));
}

/// Product state |qubit> (x) nr. The basis grows by one level to leave room
/// for the a^dagger shift of the next interaction.
template <typename Scalar>
JointState<Scalar> embed(QubitOutcome qubit, const FockVector<Scalar>& nr) {
  const Index dim = nr.dim() + 1;
  ComplexVector<Scalar> occupied = ComplexVector<Scalar>::Zero(dim);
  occupied.head(nr.dim()) = nr.amps();
  ComplexVector<Scalar> empty = ComplexVector<Scalar>::Zero(dim);
  if (qubit == QubitOutcome::G) return JointState<Scalar>(std::move(occupied), std::move(empty), nr.tail_tol());
  return JointState<Scalar>(std::move(empty), std::move(occupied), nr.tail_tol());
}

/// Exact evolution under H = beta (a^dagger sigma_- + a sigma_+) for time t.
/// Acts on each invariant block {|g,n>, |e,n+1>} as a rotation by
/// beta t sqrt(n+1). |e,0> is dark and the top |g,D-1> has no partner inside
/// the basis; both are left unchanged.
template <typename Scalar>
JointState<Scalar> jc_propagate(const JointState<Scalar>& state, const CouplingParams<Scalar>& params,
                                Scalar t) {
  using std::cos;
  using std::sin;
  using Complex = std::complex<Scalar>;
  if (!(t >= Scalar(0)) || !std::isfinite(t)) throw std::invalid_argument("jc_propagate: t must be finite and >= 0");

  const Index dim = state.dim();
  const Index edge = std::min<Index>(2, dim);
  const Scalar edge_mass = state.g_amps().tail(edge).squaredNorm() + state.e_amps().tail(edge).squaredNorm();
  if (edge_mass > Scalar(100) * state.tail_tol())
    throw TruncationError("jc_propagate: probability " + std::to_string(static_cast<double>(edge_mass)) +
                          " in the top two basis levels exceeds 100*tail_tol");

  ComplexVector<Scalar> g = state.g_amps();
  ComplexVector<Scalar> e = state.e_amps();
  const Complex minus_i(0, -1);
  for (Index n = 0; n + 1 < dim; ++n) {
    const Scalar angle = rabi_frequency(params, n) * t;
    const Scalar c = cos(angle);
    const Scalar s = sin(angle);
    const Complex gn = state.g_amps()(n);
    const Complex en1 = state.e_amps()(n + 1);
    g(n) = c * gn + minus_i * s * en1;
    e(n + 1) = c * en1 + minus_i * s * gn;
  }
  return JointState<Scalar>(std::move(g), std::move(e), state.tail_tol());
}

template <typename Scalar>
struct Branch {
  FockVector<Scalar> state;  // unnormalized selected sector
  Scalar probability;
};

/// Projects the qubit onto `outcome`. Returns the resonator sector as-is
/// (unnormalized) together with its squared norm.
template <typename Scalar>
Branch<Scalar> measure_qubit(const JointState<Scalar>& state, QubitOutcome outcome) {
  const ComplexVector<Scalar>& sector = outcome == QubitOutcome::G ? state.g_amps() : state.e_amps();
  const Scalar prob = sector.squaredNorm();
  if (!(prob >= Scalar(1e-30)))
    throw EmptyBranchError(std::string("measure_qubit: outcome ") + to_string(outcome) + " has zero probability");
  return {FockVector<Scalar>(sector, state.tail_tol()), prob};
}

/// One protocol round: fresh qubit in |g>, interact for t, detect `outcome`.
/// Returns the normalized resonator state and the detection probability.
template <typename Scalar>
Branch<Scalar> conditional_step(const FockVector<Scalar>& nr, const CouplingParams<Scalar>& params, Scalar t,
                                QubitOutcome outcome) {
  const Branch<Scalar> branch = measure_qubit(jc_propagate(embed(QubitOutcome::G, nr), params, t), outcome);
  return {normalize(branch.state).state, branch.probability};
}

}  // namespace holeburn
