#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "entlab/evolution.hpp"
#include "entlab/sampling.hpp"
#include "entlab/verify.hpp"
#include "support.hpp"

using namespace entlab;
using test::max_abs_diff;

namespace {
const double kPi = 3.14159265358979323846;

NamedHamiltonianForm h21(double omega2, double g2, double h2) {
  NamedHamiltonianForm f{HamiltonianForm::H21, {}};
  f.params.omega2 = omega2;
  f.params.g2 = g2;
  f.params.h2 = h2;
  return f;
}

NamedHamiltonianForm h22(double omega2, double f2, double h2) {
  NamedHamiltonianForm f{HamiltonianForm::H22, {}};
  f.params.omega2 = omega2;
  f.params.f2 = f2;
  f.params.h2 = h2;
  return f;
}
}  // namespace

TEST_CASE("time grids must be strictly increasing and finite") {
  CHECK_THROWS_AS(TimeGrid::of({0.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(TimeGrid::of({}), Error);
  CHECK_THROWS_AS(TimeGrid::uniform(2.0, 1), Error);
  CHECK(TimeGrid::uniform(2.0, 5).values.size() == 5);
}

TEST_CASE("evolve at t = 0 is the identity map") {
  SampleRng rng(71);
  const DensityMatrix rho = random_density(rng);
  const Observable h = named_hamiltonian(h21(1.0, 0.3, 0.2));
  CHECK(max_abs_diff(evolve(rho, h, 0.0).matrix(), rho.matrix()) <= 1e-14);
}

TEST_CASE("diagonal states are stationary under diagonal Hamiltonians") {
  const DensityMatrix rho = mixed_initial({2, 0.8});
  HamiltonianCoefficients c;
  c.h(3, 0) = 0.7;
  c.h(0, 3) = -0.2;
  c.h(3, 3) = 0.4;
  const Observable h = hamiltonian_from_coefficients(c);
  for (double t : {0.5, 2.0, 9.0}) {
    CHECK(max_abs_diff(evolve(rho, h, t).matrix(), rho.matrix()) <= 1e-13);
  }
}

TEST_CASE("psi at theta = pi/4 keeps <S_z> = 0 under H[2,1]") {
  const DensityMatrix rho0 = pure_initial({PureInitialState::Kind::Psi, kPi / 4.0, 0.0});
  const Propagator prop(named_hamiltonian(h21(1.0, 0.3, 0.2)));
  for (double t : linspace(0.0, 8.0, 17)) {
    CHECK(std::abs(observable_vector(prop.apply(rho0, t)).sz) <= 1e-12);
  }
}

TEST_CASE("evolution preserves trace, Hermiticity, spectrum and purity") {
  SampleRng rng(73);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho0 = random_density(rng);
    const Observable h = Observable(random_hermitian(rng), "H");
    const auto before = hermitian_eigen(rho0.matrix()).eigenvalues;
    const double purity0 = (rho0.matrix() * rho0.matrix()).trace().real();
    for (double t : {0.7, 3.1}) {
      const DensityMatrix rho = evolve(rho0, h, t);
      CHECK(is_hermitian(rho.matrix(), 1e-13));
      CHECK(std::abs(rho.matrix().trace() - Complex(1.0, 0.0)) <= 1e-13);
      const auto after = hermitian_eigen(rho.matrix()).eigenvalues;
      CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs((rho.matrix() * rho.matrix()).trace().real() - purity0) <= 1e-12);
    }
  }
}

TEST_CASE("<S_z> is conserved under H[1,1] and H[1,2]; <S^2> under H[1,1]") {
  SampleRng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    NamedHamiltonianForm f11{HamiltonianForm::H11, {}};
    f11.params.omega1 = rng.uniform(-1, 1);
    f11.params.g1 = rng.uniform(-1, 1);
    f11.params.h1 = rng.uniform(-1, 1);
    NamedHamiltonianForm f12{HamiltonianForm::H12, {}};
    f12.params.omega2 = rng.uniform(-1, 1);
    f12.params.f1 = rng.uniform(-1, 1);
    f12.params.h1 = rng.uniform(-1, 1);

    const DensityMatrix rho0 = random_density(rng);
    const ObservableVector obs0 = observable_vector(rho0);
    const Propagator p11(named_hamiltonian(f11));
    const Propagator p12(named_hamiltonian(f12));
    for (double t : {1.3, 4.9}) {
      CHECK(std::abs(observable_vector(p11.apply(rho0, t)).sz - obs0.sz) <= 1e-12);
      CHECK(std::abs(observable_vector(p11.apply(rho0, t)).s2 - obs0.s2) <= 1e-12);
      CHECK(std::abs(observable_vector(p12.apply(rho0, t)).sz - obs0.sz) <= 1e-12);
    }
  }
}

TEST_CASE("run_scenario requires the grid to start at zero") {
  Scenario s{family1(0.5, 0.5), h21(1.0, 0.5, 0.5), TimeGrid::of({0.5, 1.0})};
  CHECK_THROWS_AS(run_scenario(s), Error);
  s.times = TimeGrid::of({0.0, 1.0});
  const auto trace = run_scenario(s);
  CHECK(trace.size() == 2);
  CHECK(max_abs_diff(trace.front().second.matrix(), build_family(family1(0.5, 0.5)).matrix()) <=
        1e-14);
}

TEST_CASE("surface sweep reproduces the reference rows") {
  // Scenario 1 at theta = 0: <Sz> = -cos(2T) and N tracks |sin(2T)| / 2.
  const FormParameters params = default_figure_params(1);
  const auto samples = sweep_surface_T(1, {0.0}, linspace(0.0, kPi, 21), params);
  REQUIRE(samples.size() == 21);
  for (const SurfaceSample& s : samples) {
    CHECK(std::abs(s.obs.sz + std::cos(2.0 * s.scaled_time_T)) <= 1e-9);
    CHECK(std::abs(s.n_oracle - 0.5 * std::abs(std::sin(2.0 * s.scaled_time_T))) <= 1e-9);
    CHECK(s.in_family);
  }
  CHECK(samples.front().obs.sz == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(samples.front().n_oracle <= 1e-12);
}

TEST_CASE("scenario 3 hits the maximally entangled point at theta2 = 0, T = pi/4") {
  const FormParameters params = default_figure_params(3);
  const auto samples = sweep_surface_T(3, {0.0}, {0.0, kPi / 4.0}, params);
  REQUIRE(samples.size() == 2);
  CHECK(samples.back().obs.s2 == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(samples.back().n_oracle == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("scenario 5 at theta = 0 is stationary and separable") {
  const FormParameters params = default_figure_params(5);
  for (const SurfaceSample& s : sweep_surface_T(5, {0.0}, linspace(0.0, kPi, 21), params)) {
    CHECK(s.n_oracle <= 1e-12);
    CHECK(s.n_corrected <= 1e-12);
  }
}

TEST_CASE("calibrated time scale equals twice the coupling") {
  FormParameters p1 = default_figure_params(1);  // g2 = 0.5
  CHECK(calibrate_time_scale(1, p1) == doctest::Approx(1.0).epsilon(1e-9));
  p1.g2 = 0.3;
  CHECK(calibrate_time_scale(1, p1) == doctest::Approx(0.6).epsilon(1e-9));

  const FormParameters p2 = default_figure_params(2);  // f2 = 0.5
  CHECK(calibrate_time_scale(2, p2) == doctest::Approx(1.0).epsilon(1e-9));

  FormParameters p7 = default_figure_params(7);
  p7.g2 = 0.25;
  CHECK(calibrate_time_scale(7, p7) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("zero coupling cannot be calibrated") {
  FormParameters p = default_figure_params(1);
  p.g2 = 0.0;
  CHECK_THROWS_AS(calibrate_time_scale(1, p), CalibrationFailureError);
}

TEST_CASE("every figure run matches its reference surface after (kappa, gamma)") {
  const std::vector<double> thetas = linspace(0.0, kPi / 2.0, 41);
  const std::vector<double> Ts = linspace(0.0, kPi, 41);
  for (int fig = 1; fig <= 8; ++fig) {
    const FigureRun run = run_figure(fig, default_figure_params(fig), thetas, Ts);
    CHECK(run.calibration.max_reference_error <= 1e-6);
    CHECK(run.calibration.gamma == doctest::Approx(fig <= 4 ? 1.0 : 0.5));
    double relation_err = 0.0;
    for (const SurfaceSample& s : run.samples) {
      CHECK(s.in_family);
      relation_err = std::max(relation_err, std::abs(s.n_corrected - s.n_oracle));
    }
    CHECK(relation_err <= 1e-10);
  }
}

TEST_CASE("verify_relation_over_time accepts claimed pairings and rejects others") {
  const TimeGrid times = TimeGrid::uniform(10.0, 10);
  const auto r1 = verify_relation_over_time(1, GeneralForm::H1, 50, times, 1e-10, 101);
  CHECK(r1.pass);
  const auto r2 = verify_relation_over_time(2, GeneralForm::H2, 50, times, 1e-10, 102);
  CHECK(r2.pass);
  const auto r5 = verify_relation_over_time(5, GeneralForm::H2, 25, times, 1e-10, 103);
  CHECK(r5.pass);
  CHECK_THROWS_AS(verify_relation_over_time(3, GeneralForm::H2, 5, times, 1e-10, 104),
                  UnsupportedPairingError);
}

TEST_CASE("conservation checks") {
  const TimeGrid times = TimeGrid::uniform(10.0, 10);
  CHECK(verify_conservation(ConservationKind::PsiUnderH1, 50, times, 1e-10, 105).pass);
  CHECK(verify_conservation(ConservationKind::PhiUnderH2Symmetric, 50, times, 1e-10, 106).pass);

  // Bell state under a fixed H[1]: N pinned at 1/2.
  NamedHamiltonianForm h1{HamiltonianForm::H1, {}};
  h1.params.h30 = 0.3;
  h1.params.h03 = -0.6;
  h1.params.f1 = 0.8;
  h1.params.g1 = 0.2;
  h1.params.h33 = 0.5;
  const DensityMatrix bell = pure_initial({PureInitialState::Kind::Psi, kPi / 4.0, 0.0});
  const Propagator prop(named_hamiltonian(h1));
  for (double t : times.values) {
    CHECK(negativity_oracle(prop.apply(bell, t)) == doctest::Approx(0.5).epsilon(1e-12));
  }

  const DensityMatrix product = pure_initial({PureInitialState::Kind::Psi, 0.0, 0.0});
  for (double t : times.values) {
    CHECK(negativity_oracle(prop.apply(product, t)) <= 1e-12);
  }
}

TEST_CASE("breaking demo oscillates for generic theta and is flat at theta = pi/4 under H[2,1]") {
  const TimeGrid times = TimeGrid::of(linspace(0.0, kPi, 101));
  const auto trace = breaking_demo({PureInitialState::Kind::Psi, 0.0, 0.0}, h22(1.0, 0.5, 0.5), times);
  double lo = 1.0, hi = 0.0;
  for (const auto& [t, n] : trace) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  CHECK(hi >= 0.499);
  CHECK(lo <= 1e-9);

  const auto flat = breaking_demo({PureInitialState::Kind::Psi, kPi / 4.0, 0.0},
                                  h21(1.0, 0.5, 0.5), times);
  for (const auto& [t, n] : flat) CHECK(n == doctest::Approx(0.5).epsilon(1e-11));

  const auto mid = breaking_demo({PureInitialState::Kind::Psi, kPi / 8.0, 0.0},
                                 h21(1.0, 0.5, 0.5), times);
  double amp_lo = 1.0, amp_hi = 0.0;
  for (const auto& [t, n] : mid) {
    amp_lo = std::min(amp_lo, n);
    amp_hi = std::max(amp_hi, n);
  }
  CHECK(amp_hi - amp_lo > 1e-3);
  CHECK(amp_hi == doctest::Approx(0.5).epsilon(1e-9));
  // Minimum follows the reference surface at cos(2T) = +-1: sqrt(1 - cos^2(2 theta)) / 2.
  CHECK(amp_lo == doctest::Approx(0.5 * std::abs(std::sin(kPi / 4.0))).epsilon(1e-6));
}

TEST_CASE("separable mixtures start unentangled and become entangled") {
  for (int fig = 5; fig <= 8; ++fig) {
    const FormParameters params = default_figure_params(fig);
    for (int member = 0; member <= 1; ++member) {
      const auto samples =
          sweep_surface_T(fig, {kPi / 4.0}, linspace(0.0, kPi, 41), params, member);
      CHECK(samples.front().n_oracle <= 1e-12);
      double peak = 0.0;
      for (const SurfaceSample& s : samples) peak = std::max(peak, s.n_oracle);
      CHECK(peak > 0.05);
    }
  }
}
