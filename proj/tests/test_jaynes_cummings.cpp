#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>
#include <random>

#include "holeburn/jaynes_cummings.hpp"
#include "oracles.hpp"

using namespace holeburn;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

JointState<double> random_joint(std::mt19937_64& rng, int dim) {
  Eigen::VectorXcd both = oracle::random_amps(rng, 2 * dim, 0);
  Eigen::VectorXcd g = both.head(dim), e = both.tail(dim);
  // Keep the top two levels empty before and after one propagation.
  g.tail(3).setZero();
  e.tail(2).setZero();
  const double norm = std::sqrt(g.squaredNorm() + e.squaredNorm());
  return JointState<double>(g / norm, e / norm);
}

Eigen::VectorXcd stacked(const JointState<double>& s) {
  Eigen::VectorXcd out(2 * s.dim());
  out << s.g_amps(), s.e_amps();
  return out;
}

}  // namespace

TEST_CASE("rabi frequency") {
  const CouplingParams<double> unit(1.0);
  CHECK(rabi_frequency(unit, 0) == 1.0);
  CHECK(rabi_frequency(unit, 3) == 2.0);
  CHECK(rabi_frequency(CouplingParams<double>(2.827e8), 4) == doctest::Approx(6.321364172e8).epsilon(1e-9));
  CHECK_THROWS_AS(rabi_frequency(unit, -1), std::invalid_argument);
  CHECK_THROWS_AS(CouplingParams<double>(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CouplingParams<double>(-1.0), std::invalid_argument);
}

TEST_CASE("embed") {
  const auto vac = embed(QubitOutcome::G, FockVector<double>::number_state(0, 16));
  CHECK(vac.dim() == 17);
  CHECK(vac.g_amps()(0) == cd(1.0));
  CHECK(vac.e_amps().norm() == 0.0);

  const auto excited = embed(QubitOutcome::E, FockVector<double>::number_state(2, 16));
  CHECK(excited.e_amps()(2) == cd(1.0));
  CHECK(excited.g_amps().norm() == 0.0);

  const auto coh = coherent_state(cd(2.0));
  const auto joint = embed(QubitOutcome::G, coh);
  CHECK(joint.g_amps().head(coh.dim()) == coh.amps());
  CHECK(joint.g_amps()(coh.dim()) == cd(0.0));
}

TEST_CASE("propagation of |g,0>") {
  const CouplingParams<double> params(1.7);
  const auto start = embed(QubitOutcome::G, FockVector<double>::number_state(0, 16));
  for (double t : {0.0, 0.1, 0.9, 2.5, 11.0}) {
    const auto out = jc_propagate(start, params, t);
    CHECK(std::abs(out.g_amps()(0) - cd(std::cos(1.7 * t))) < 1e-15);
    CHECK(std::abs(out.e_amps()(1) - cd(0, -std::sin(1.7 * t))) < 1e-15);
    CHECK(std::abs(out.squared_norm() - 1.0) < 1e-15);
  }
  const auto quarter = jc_propagate(start, params, pi / (2 * 1.7));
  CHECK(std::abs(quarter.e_amps()(1) - cd(0, -1)) < 1e-15);
  CHECK(std::norm(quarter.g_amps()(0)) < 1e-30);
}

TEST_CASE("propagation for zero time is the identity") {
  std::mt19937_64 rng(11);
  const auto state = random_joint(rng, 20);
  const auto out = jc_propagate(state, CouplingParams<double>(3.0), 0.0);
  CHECK(out.g_amps() == state.g_amps());
  CHECK(out.e_amps() == state.e_amps());
}

TEST_CASE("propagation matches the dense Hamiltonian exponential") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time(0.0, 6.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 12 + trial % 7;
    const double beta = 0.5 + 0.1 * trial;
    const double t = time(rng);
    const auto state = random_joint(rng, dim);
    const Eigen::VectorXcd expected = oracle::jc_unitary(dim, beta, t) * stacked(state);
    const Eigen::VectorXcd actual = stacked(jc_propagate(state, CouplingParams<double>(beta), t));
    CHECK((expected - actual).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("dark |e,0> component is unchanged") {
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(16), e = Eigen::VectorXcd::Zero(16);
  e(0) = cd(0.6, 0.8);
  const auto out = jc_propagate(JointState<double>(g, e), CouplingParams<double>(1.0), 2.3);
  CHECK(out.e_amps()(0) == cd(0.6, 0.8));
  CHECK(out.g_amps().norm() == 0.0);
}

TEST_CASE("propagation properties") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  const CouplingParams<double> params(1.3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto state = random_joint(rng, 24);
    const double t1 = time(rng), t2 = time(rng);
    const auto once = jc_propagate(state, params, t1 + t2);
    const auto twice = jc_propagate(jc_propagate(state, params, t1), params, t2);

    CHECK(std::abs(once.squared_norm() - state.squared_norm()) < 1e-12);
    CHECK((stacked(once) - stacked(twice)).cwiseAbs().maxCoeff() < 1e-10);
    // Weight of every excitation block {|g,n>, |e,n+1>} is conserved.
    for (Index n = 0; n + 1 < state.dim(); ++n) {
      const double before = std::norm(state.g_amps()(n)) + std::norm(state.e_amps()(n + 1));
      const double after = std::norm(once.g_amps()(n)) + std::norm(once.e_amps()(n + 1));
      CHECK(std::abs(before - after) < 1e-12);
    }
  }
}

TEST_CASE("propagation guards the truncation edge") {
  const auto top = embed(QubitOutcome::G, FockVector<double>::number_state(15, 16));
  CHECK_THROWS_AS(jc_propagate(top, CouplingParams<double>(1.0), 0.3), TruncationError);
  const auto ok = embed(QubitOutcome::G, FockVector<double>::number_state(14, 16));
  CHECK_NOTHROW(jc_propagate(ok, CouplingParams<double>(1.0), 0.3));
  CHECK_THROWS_AS(jc_propagate(ok, CouplingParams<double>(1.0), -0.1), std::invalid_argument);
}

TEST_CASE("qubit measurement") {
  const double theta = 0.7;
  const auto state = jc_propagate(embed(QubitOutcome::G, FockVector<double>::number_state(0, 16)),
                                  CouplingParams<double>(1.0), theta);
  const auto g = measure_qubit(state, QubitOutcome::G);
  CHECK(g.probability == doctest::Approx(std::pow(std::cos(theta), 2)).epsilon(1e-14));
  CHECK(std::abs(g.state[0] - cd(std::cos(theta))) < 1e-15);
  const auto e = measure_qubit(state, QubitOutcome::E);
  CHECK(e.probability == doctest::Approx(std::pow(std::sin(theta), 2)).epsilon(1e-14));
  CHECK(std::abs(e.state[1] - cd(0, -std::sin(theta))) < 1e-15);

  const auto emptied = jc_propagate(embed(QubitOutcome::G, FockVector<double>::number_state(0, 16)),
                                    CouplingParams<double>(1.0), pi / 2);
  CHECK_THROWS_AS(measure_qubit(emptied, QubitOutcome::G), EmptyBranchError);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto s = jc_propagate(random_joint(rng, 18), CouplingParams<double>(0.9), 0.37 * i);
    const double total = measure_qubit(s, QubitOutcome::G).probability + measure_qubit(s, QubitOutcome::E).probability;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("conditional step") {
  const CouplingParams<double> params(1.0);

  SUBCASE("g detection nulls the targeted component") {
    const auto out = conditional_step(coherent_state(cd(2.0)), params, pi / (2 * std::sqrt(5.0)), QubitOutcome::G);
    CHECK(std::norm(out.state[4]) < 1e-30);
    CHECK(std::norm(out.state[3]) > 1e-2);
  }
  SUBCASE("vacuum excited by a pi pulse") {
    const auto out = conditional_step(FockVector<double>::number_state(0, 16), params, pi / 2, QubitOutcome::E);
    CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(std::abs(out.state[1]) - 1.0) < 1e-15);
  }
  SUBCASE("vacuum stays put on g") {
    for (double t : {0.2, 1.0, 2.9}) {
      const auto out = conditional_step(FockVector<double>::number_state(0, 16), params, t, QubitOutcome::G);
      CHECK(out.probability == doctest::Approx(std::pow(std::cos(t), 2)).epsilon(1e-13));
      CHECK(std::abs(std::abs(out.state[0]) - 1.0) < 1e-15);
    }
  }
  SUBCASE("g branch multiplies by cos(beta t sqrt(n+1)) elementwise") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> time(0.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
      const FockVector<double> nr(oracle::random_amps(rng, 20));
      const double t = time(rng);
      const auto branch = measure_qubit(jc_propagate(embed(QubitOutcome::G, nr), params, t), QubitOutcome::G);
      for (Index n = 0; n < nr.dim(); ++n)
        CHECK(std::abs(branch.state[n] - nr[n] * std::cos(t * std::sqrt(n + 1.0))) < 1e-12);
    }
  }
  SUBCASE("e branch shifts by one with -i sin(beta t sqrt(n+1))") {
    std::mt19937_64 rng(31);
    const FockVector<double> nr(oracle::random_amps(rng, 20));
    const double t = 1.234;
    const auto branch = measure_qubit(jc_propagate(embed(QubitOutcome::G, nr), params, t), QubitOutcome::E);
    CHECK(branch.state[0] == cd(0.0));
    for (Index n = 0; n < nr.dim(); ++n)
      CHECK(std::abs(branch.state[n + 1] - cd(0, -1) * nr[n] * std::sin(t * std::sqrt(n + 1.0))) < 1e-12);
  }
}
