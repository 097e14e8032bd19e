#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holeburn/errors.hpp"

namespace holeburn {

using Eigen::Index;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr Index kMinFockDim = 16;

/// Complex amplitudes c_0..c_{D-1} of a resonator state over a truncated
/// number basis. The state may be unnormalized (a post-selection branch
/// carries its probability in its norm).
template <typename Scalar = double>
class FockVector {
 public:
  using Complex = std::complex<Scalar>;

  explicit FockVector(ComplexVector<Scalar> amps, Scalar tail_tol = Scalar(kDefaultTailTol))
      : amps_(std::move(amps)), tail_tol_(tail_tol) {
    if (amps_.size() < 1) throw std::invalid_argument("FockVector: dimension must be >= 1");
    if (!amps_.allFinite()) throw std::invalid_argument("FockVector: non-finite amplitude");
    if (!(tail_tol_ > Scalar(0))) throw std::invalid_argument("FockVector: tail_tol must be > 0");
  }

  /// |n> embedded in a basis of size dim.
  static FockVector number_state(Index n, Index dim, Scalar tail_tol = Scalar(kDefaultTailTol)) {
    if (n < 0 || n >= dim) throw std::invalid_argument("number_state: n outside basis");
    ComplexVector<Scalar> amps = ComplexVector<Scalar>::Zero(dim);
    amps(n) = Complex(1);
    return FockVector(std::move(amps), tail_tol);
  }

  const ComplexVector<Scalar>& amps() const { return amps_; }
  Index dim() const { return amps_.size(); }
  Scalar tail_tol() const { return tail_tol_; }
  Complex operator[](Index n) const { return amps_(n); }
  Scalar squared_norm() const { return amps_.squaredNorm(); }
  Scalar norm() const { return amps_.norm(); }

 private:
  ComplexVector<Scalar> amps_;
  Scalar tail_tol_;
};

/// Occupation probabilities p_n = |c_n|^2.
template <typename Scalar = double>
struct NumberDistribution {
  RealVector<Scalar> p;

  Index dim() const { return p.size(); }
  Scalar operator[](Index n) const { return p(n); }
  Scalar total() const { return p.sum(); }
};

namespace detail {

// log(|alpha|^{2n} / n!), with the 0^0 = 1 convention.
template <typename Scalar>
Scalar log_poisson_numerator(Scalar abs2_alpha, Index n) {
  if (n == 0) return Scalar(0);
  if (abs2_alpha == Scalar(0)) return -std::numeric_limits<Scalar>::infinity();
  using std::lgamma;
  using std::log;
  return Scalar(n) * log(abs2_alpha) - lgamma(Scalar(n + 1));
}

template <typename Scalar>
void require_tail_tol(Scalar tail_tol) {
  if (!(tail_tol > Scalar(0)) || tail_tol > Scalar(1e-6))
    throw std::invalid_argument("tail_tol must lie in (0, 1e-6]");
}

}  // namespace detail

/// Basis size for |alpha>: the top retained level D - 1 - extra_shift already
/// lies in a Poisson tail of mass below tail_tol, so |c_{D-1}|^2 <= tail_tol
/// and the discarded mass is smaller still. Never less than kMinFockDim.
template <typename Scalar>
Index auto_dim(std::complex<Scalar> alpha, Index extra_shift = 0,
               Scalar tail_tol = Scalar(kDefaultTailTol)) {
  if (extra_shift < 0) throw std::invalid_argument("auto_dim: extra_shift must be >= 0");
  if (!(tail_tol > Scalar(0))) throw std::invalid_argument("auto_dim: tail_tol must be > 0");
  const Scalar mean = std::norm(alpha);
  if (!std::isfinite(mean)) throw std::invalid_argument("auto_dim: non-finite alpha");

  Index cutoff = 1;  // vacuum: nothing from n = 1 on
  if (mean > Scalar(0)) {
    using std::ceil;
    using std::exp;
    using std::sqrt;
    const Index nmax = static_cast<Index>(ceil(mean + Scalar(40) * sqrt(mean) + Scalar(60)));
    std::vector<Scalar> suffix(static_cast<std::size_t>(nmax) + 2, Scalar(0));
    for (Index n = nmax; n >= 0; --n) {
      const Scalar p = exp(detail::log_poisson_numerator(mean, n) - mean);
      suffix[static_cast<std::size_t>(n)] = suffix[static_cast<std::size_t>(n) + 1] + p;
    }
    cutoff = nmax + 1;
    for (Index k = 0; k <= nmax; ++k) {
      if (suffix[static_cast<std::size_t>(k)] < tail_tol) {
        cutoff = k;
        break;
      }
    }
  }
  return std::max(kMinFockDim, cutoff + 1 + extra_shift);
}

/// Coherent state |alpha> with c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
/// The coefficients are not renormalized: the missing mass is the truncated
/// Poisson tail, below tail_tol.
template <typename Scalar>
FockVector<Scalar> coherent_state(std::complex<Scalar> alpha,
                                  Scalar tail_tol = Scalar(kDefaultTailTol),
                                  Index extra_shift = 0) {
  using std::exp;
  using std::sqrt;
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("coherent_state: non-finite alpha");
  detail::require_tail_tol(tail_tol);

  const Index dim = auto_dim(alpha, extra_shift, tail_tol);
  ComplexVector<Scalar> amps(dim);
  amps(0) = std::complex<Scalar>(exp(-std::norm(alpha) / Scalar(2)));
  for (Index n = 1; n < dim; ++n) amps(n) = amps(n - 1) * alpha / sqrt(Scalar(n));
  return FockVector<Scalar>(std::move(amps), tail_tol);
}

template <typename Scalar>
struct Normalized {
  FockVector<Scalar> state;
  Scalar norm;  // pre-normalization Euclidean norm; eta = 1 / norm
};

template <typename Scalar>
Normalized<Scalar> normalize(const FockVector<Scalar>& state) {
  const Scalar norm = state.norm();
  if (!(norm > Scalar(0)) || !std::isfinite(norm))
    throw EmptyBranchError("normalize: zero-norm state (empty post-selection branch)");
  return {FockVector<Scalar>(state.amps() / norm, state.tail_tol()), norm};
}

template <typename Scalar>
NumberDistribution<Scalar> number_distribution(const FockVector<Scalar>& state) {
  return {state.amps().cwiseAbs2()};
}

/// Population of |n_target> after normalizing.
template <typename Scalar>
Scalar fidelity_to_fock(const FockVector<Scalar>& state, Index n_target) {
  if (n_target < 0 || n_target >= state.dim())
    throw std::invalid_argument("fidelity_to_fock: target " + std::to_string(n_target) +
                                " outside basis of size " + std::to_string(state.dim()));
  const Scalar total = state.squared_norm();
  if (!(total > Scalar(0))) throw EmptyBranchError("fidelity_to_fock: zero-norm state");
  return std::norm(state[n_target]) / total;
}

}  // namespace holeburn
