#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "holeburn/device.hpp"
#include "holeburn/jaynes_cummings.hpp"
#include "holeburn/protocol.hpp"

using namespace holeburn;
using std::numbers::pi;

namespace {

// Representative device: E_J0 = 5 GHz, B = 0.1 T, l = 30 um, x0 = 500 fm,
// at the working point Phi_b = Phi_0 / 2.
DeviceParams reference_device() {
  DeviceParams p;
  p.ej0 = hz_to_angular(5e9);
  p.c1 = 2e-15;
  p.cj0 = 0.5e-15;
  p.v1 = 0.08;
  p.phi_x = 0.0;
  p.phi_b = 0.5 * flux_quantum();
  p.b_field = 0.1;
  p.ell = 30e-6;
  p.x0 = 500e-15;
  p.omega = hz_to_angular(100e6);
  return p;
}

}  // namespace

TEST_CASE("flux quantum") {
  CHECK(flux_quantum() == doctest::Approx(2.06783384846193e-15).epsilon(1e-13));
  CHECK(flux_quantum(kPlanck, 2 * kElementaryCharge) == doctest::Approx(flux_quantum() / 2));
  CHECK(flux_quantum() == flux_quantum());
}

TEST_CASE("total flux") {
  CHECK(total_flux(1e-15, 0.1, 30e-6, 0.0) == 1e-15);
  CHECK(total_flux(0.0, 0.1, 30e-6, 500e-15) == doctest::Approx(1.5e-18).epsilon(1e-12));
  const double a = total_flux(0.0, 0.1, 30e-6, 200e-15), b = total_flux(0.0, 0.1, 30e-6, 300e-15);
  CHECK(a + b == doctest::Approx(total_flux(0.0, 0.1, 30e-6, 500e-15)).epsilon(1e-14));
}

TEST_CASE("charging energy") {
  CHECK(charging_energy(4e-15, 1e-15) == doctest::Approx(2 * charging_energy(8e-15, 2e-15)));
  CHECK(charging_energy(0.0, 1e-15) ==
        doctest::Approx(kElementaryCharge * kElementaryCharge / (4e-15) / kReducedPlanck));
  const double hz = angular_to_hz(charging_energy(2e-15, 0.5e-15));
  CHECK(hz > 1e9);
  CHECK(hz < 1e11);
  CHECK_THROWS_AS(charging_energy(1e-15, 0.0), std::invalid_argument);
}

TEST_CASE("effective model at the reference point") {
  const EffectiveModel model = effective_model(reference_device());
  // 4 E_J0 pi B l x0 / Phi_0 with E_J0 = 5 GHz: 45.5780234363588 MHz (40-digit evaluation).
  CHECK(angular_to_hz(model.beta()) == doctest::Approx(45.5780234363588e6).epsilon(1e-12));
  CHECK(model.lambda0 < 0);
  CHECK(std::abs(angular_to_hz(model.beta()) - 45e6) / 45e6 < 0.05);
  CHECK(model.small_angle == doctest::Approx(pi * 1.5e-18 / flux_quantum()));
  CHECK(model.warnings.empty());
  CHECK(model.n1 == doctest::Approx(2e-15 * 0.08 / (2 * kElementaryCharge)));
}

TEST_CASE("effective model switches and degeneracies") {
  DeviceParams p = reference_device();
  const double on = effective_model(p).beta();

  p.phi_x = 0.5 * flux_quantum();
  CHECK(effective_model(p).beta() < 1e-12 * on);

  p = reference_device();
  p.v1 = kElementaryCharge / p.c1;  // N1 = 1/2
  const EffectiveModel degenerate = effective_model(p);
  CHECK(std::abs(degenerate.omega0) < 1e-9 * degenerate.ec);

  p.v1 *= 0.9;
  CHECK(effective_model(p).omega0 < 0);
  p.v1 /= 0.81;
  CHECK(effective_model(p).omega0 > 0);
}

TEST_CASE("effective model validation") {
  DeviceParams p = reference_device();
  p.phi_b = 0.3 * flux_quantum();
  CHECK_THROWS_AS(effective_model(p), std::domain_error);

  p = reference_device();
  p.phi_b = 1.5 * flux_quantum();
  CHECK_NOTHROW(effective_model(p));

  p = reference_device();
  p.x0 = 5e-11;  // pi B l x0 / Phi_0 ~ 0.23
  CHECK(effective_model(p).warnings.size() == 1);

  p = reference_device();
  p.ell = -1.0;
  CHECK_THROWS_AS(effective_model(p), std::invalid_argument);
}

TEST_CASE("coupling is linear in B, l, x0 and E_J0") {
  const DeviceParams base = reference_device();
  const double ref = effective_model(base).lambda0;
  for (auto field : {&DeviceParams::b_field, &DeviceParams::ell, &DeviceParams::x0, &DeviceParams::ej0}) {
    DeviceParams scaled = base;
    scaled.*field *= 3.0;
    CHECK(effective_model(scaled).lambda0 == doctest::Approx(3.0 * ref).epsilon(1e-13));
  }
}

TEST_CASE("coupling is even and 2 Phi_0 periodic in Phi_x") {
  DeviceParams p = reference_device();
  const double phi0 = flux_quantum();
  for (double x : {0.1, 0.27, 0.8, 1.3}) {
    p.phi_x = x * phi0;
    const double at = effective_model(p).lambda0;
    p.phi_x = -x * phi0;
    CHECK(effective_model(p).lambda0 == doctest::Approx(at).epsilon(1e-12));
    p.phi_x = (x + 2.0) * phi0;
    CHECK(effective_model(p).lambda0 == doctest::Approx(at).epsilon(1e-12));
  }
}

TEST_CASE("decoherence budget") {
  CHECK(uniform_budget(0.3e-9, 500e-9) == 1666);
  CHECK(uniform_budget(5.55e-9, 500e-9) == 90);

  const std::vector<double> short_run(10, 5e-9);
  const DecoherenceBudget fits = decoherence_budget(short_run, 500e-9, 160e-6);
  CHECK(!fits.exceeded());
  CHECK(fits.feasible_steps == 10);
  CHECK(fits.limit == 500e-9);
  CHECK(fits.margin == doctest::Approx(0.9));

  const std::vector<double> long_run(120, 4.5e-9);
  const DecoherenceBudget over = decoherence_budget(long_run, 500e-9, 160e-6);
  CHECK(over.exceeded());
  CHECK(over.feasible_steps == 111);
  CHECK(over.margin < 0);

  CHECK(decoherence_budget(short_run, 1e-3, 20e-9).limit == 20e-9);
  CHECK_THROWS_AS(decoherence_budget(short_run, 0.0, 1.0), std::invalid_argument);

  std::vector<double> taus;
  double previous = 1.0;
  for (int i = 0; i < 50; ++i) {
    taus.push_back(1e-9 * (1 + i % 4));
    const double margin = decoherence_budget(taus, 500e-9, 160e-6).margin;
    CHECK(margin <= previous);
    previous = margin;
  }
}

TEST_CASE("hole time at the reference coupling") {
  const CouplingParams<double> params(effective_model(reference_device()).beta());
  const double tau = hole_time<double>(0, params);
  CHECK(tau == doctest::Approx(5.486e-9).epsilon(1e-3));
  CHECK(uniform_budget(tau, 500e-9) == 91);
}
