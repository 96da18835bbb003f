#include "ekeu/sim.hpp"

#include "ekeu/operators.hpp"
#include "ekeu/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace ekeu;

namespace {

SimParams base_params(const GridPtr& g) {
  SimParams p;
  p.grid = g;
  p.r = 1.0;
  p.dt = 1e-3;
  p.t_end = 1.0;
  p.forcing = zero_forcing(g);
  return p;
}

}  // namespace

TEST_CASE("rhs vanishes on the forced shear steady state") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.7;
  p.forcing = shear_forcing(g, p.r);  // curl g = -r cos y
  auto w = VorticityField::from_function(g, [](Real, Real y) { return -std::cos(y); });
  CHECK(rhs(w, p).spectral.abs().maxCoeff() <= 1e-13);
}

TEST_CASE("rhs on a single mode is the pure linear symbol") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.3;
  p.nu = 0.01;
  const Complex amp(0.2, -0.4);
  const VorticityField w = VorticityField::single_mode(g, 1, 0, amp);
  const VorticityField f = rhs(w, p);
  // |k|^2 = 1 for the (1,0) mode: rhs_k = -(r + nu) w_k.
  CHECK(f.coeff(1, 0) == -(p.r + p.nu) * amp);
  SpectralField rest = f.spectral;
  rest(g->index_of_mode(1), 0) = 0.0;
  rest(g->index_of_mode(-1), 0) = 0.0;
  CHECK(rest.abs().maxCoeff() == 0.0);
}

TEST_CASE("rhs of the zero state is curl g") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.forcing = explicit_forcing(
      g, VorticityField::from_function(g, [](Real x, Real) { return std::cos(x); }));
  const VorticityField f = rhs(VorticityField::zero(g), p);
  CHECK((f.spectral - p.forcing.curl_g.spectral).abs().maxCoeff() == 0.0);
}

TEST_CASE("one step decays a single mode by exactly exp(-(r+nu)dt)") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.4;
  p.nu = 0.05;
  p.dt = 0.01;
  const Real a = 0.37;
  const VorticityField w = VorticityField::single_mode(g, 1, 0, Complex(a, 0.0));
  const VorticityField w1 = step(w, p);
  const Real factor = std::exp(-(p.r + p.nu) * p.dt);
  CHECK(w1.coeff(1, 0).real() == a * factor);  // exact, not approximate
  CHECK(w1.coeff(1, 0).imag() == 0.0);
}

TEST_CASE("with the nonlinear hook off, every mode decays exactly") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.9;
  p.nu = 1e-3;
  p.dt = 0.02;
  p.linear_only = true;
  const VorticityField w = random_band_limited(g, 77, 1, g->kmax, 2.0);
  const VorticityField w1 = step(w, p);
  for (int i = 0; i < g->n; ++i)
    for (int j = 0; j < g->n; ++j) {
      const Real factor = std::exp(-(p.r + p.nu * g->k2(i, j)) * p.dt);
      CHECK(w1.spectral(i, j) == w.spectral(i, j) * factor);
    }
}

TEST_CASE("the forced shear steady state is a fixed point of the stepper") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.5;
  p.dt = 1e-2;
  p.forcing = shear_forcing(g, p.r);
  auto w = VorticityField::from_function(g, [](Real, Real y) { return -std::cos(y); });
  const VorticityField w1 = step(w, p);
  CHECK((w1.spectral - w.spectral).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("stepper is 4th order on a smooth forced flow") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.5;
  p.forcing = random_forcing(g, 5, 1, 3, 0.8);
  const VorticityField w0 = random_band_limited(g, 6, 1, 5, 1.0);
  const Real T = 0.5;

  auto final_state = [&](Real dt) {
    SimParams q = p;
    q.dt = dt;
    q.t_end = T;
    q.record_every = 1000000;  // only endpoints matter here
    return simulate(w0, q).final_state();
  };

  const VorticityField ref = final_state(T / 2048.0);
  Real prev_err = -1.0;
  int checked = 0;
  for (Real dt : {T / 32.0, T / 64.0, T / 128.0}) {
    const VorticityField got = final_state(dt);
    const Real err = std::sqrt((got.spectral - ref.spectral).abs2().sum());
    if (prev_err > 0.0) {
      const Real slope = std::log2(prev_err / err);
      CHECK(slope >= 3.8);
      ++checked;
    }
    prev_err = err;
  }
  CHECK(checked == 2);
}

TEST_CASE("simulate reproduces the shear amplitude ODE c' = r(1 - c)") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.8;
  p.dt = 1e-3;
  p.t_end = 10.0 / p.r;
  p.record_every = 100;
  p.forcing = shear_forcing(g, p.r);
  const Real c0 = 3.0;
  auto w0 = VorticityField::from_function(g, [&](Real, Real y) { return -c0 * std::cos(y); });

  const TrajectoryRecord rec = simulate(w0, p);
  REQUIRE_FALSE(rec.failed);
  const Real norm_shear = std::sqrt(2.0) * kPi;  // ||cos y||_{L^2}
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const Real expected = 1.0 + (c0 - 1.0) * std::exp(-p.r * rec.times[i]);
    const Real c = std::sqrt(rec.enstrophy[i]) / norm_shear;
    CHECK(c == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("unforced decay: ||w(t)|| = ||w0|| exp(-rt)") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 1.3;
  p.dt = 1e-3;
  p.t_end = 3.0;
  p.record_every = 50;
  const VorticityField w0 = random_band_limited(g, 21, 1, 6, 2.0);
  const TrajectoryRecord rec = simulate(w0, p);
  REQUIRE_FALSE(rec.failed);
  const Real z0 = std::sqrt(rec.enstrophy.front());
  for (std::size_t i = 0; i < rec.size(); ++i)
    CHECK(std::sqrt(rec.enstrophy[i]) ==
          doctest::Approx(z0 * std::exp(-p.r * rec.times[i])).epsilon(1e-8));
}

TEST_CASE("structural preservation along a forced run") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.forcing = random_forcing(g, 15, 1, 3, 1.0);
  p.dt = 5e-3;
  p.t_end = 0.5;
  p.snapshot_every = 20;
  const TrajectoryRecord rec = simulate(random_band_limited(g, 16, 1, 4, 1.5), p);
  REQUIRE_FALSE(rec.failed);
  REQUIRE(rec.snapshots.size() > 2);
  for (const auto& [idx, w] : rec.snapshots) {
    CHECK(w.mean() == 0.0);
    CHECK(is_dealiased(w));
    CHECK(conjugate_symmetry_defect(w.spectral) == 0.0);
  }
}

TEST_CASE("record times start at 0 and end at t_end") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.dt = 1e-2;
  p.t_end = 0.55;  // not a multiple of the record stride
  p.record_every = 10;
  const TrajectoryRecord rec = simulate(VorticityField::zero(g), p);
  CHECK(rec.times.front() == 0.0);
  CHECK(rec.times.back() == doctest::Approx(0.55).epsilon(1e-12));
  for (std::size_t i = 1; i < rec.size(); ++i) CHECK(rec.times[i] > rec.times[i - 1]);
}

TEST_CASE("simulate is deterministic") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.forcing = random_forcing(g, 3, 1, 4, 1.2);
  p.dt = 2e-3;
  p.t_end = 0.3;
  const VorticityField w0 = random_band_limited(g, 4, 1, 5, 1.0);
  const TrajectoryRecord a = simulate(w0, p);
  const TrajectoryRecord b = simulate(w0, p);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.energy[i] == b.energy[i]);
    CHECK(a.enstrophy[i] == b.enstrophy[i]);
  }
  CHECK((a.final_state().spectral == b.final_state().spectral).all());
}

TEST_CASE("numerical blow-up aborts with a flagged partial record") {
  auto g = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.r = 1e-6;   // negligible damping
  p.dt = 5.0;   // grossly violates the advective stability limit
  p.t_end = 500.0;
  p.record_every = 1;
  const VorticityField w0 = random_band_limited(g, 8, 2, 8, 50.0);
  const TrajectoryRecord rec = simulate(w0, p);
  CHECK(rec.failed);
  CHECK(rec.size() >= 1);
  CHECK_FALSE(rec.failure.empty());
  CHECK(rec.cfl_warning);
}

TEST_CASE("ensemble of one equals simulate") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.forcing = random_forcing(g, 30, 1, 3, 0.5);
  p.t_end = 0.2;
  const VorticityField w0 = random_band_limited(g, 31, 1, 4, 1.0);
  const auto recs = run_ensemble({w0}, p);
  REQUIRE(recs.size() == 1);
  const TrajectoryRecord solo = simulate(w0, p);
  CHECK((recs[0].final_state().spectral == solo.final_state().spectral).all());
}

TEST_CASE("ensemble members are independent and order-preserving") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.t_end = 0.1;
  std::vector<VorticityField> initials;
  for (int i = 0; i < 4; ++i) initials.push_back(random_band_limited(g, 50 + i, 1, 4, 1.0));
  const auto serial = run_ensemble(initials, p, 1);
  const auto parallel = run_ensemble(initials, p, 4);
  REQUIRE(serial.size() == 4);
  REQUIRE(parallel.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK((serial[i].final_state().spectral == parallel[i].final_state().spectral).all());
}

TEST_CASE("identical ensemble members give identical records") {
  auto g = make_grid(16, kTwoPi);
  SimParams p = base_params(g);
  p.t_end = 0.1;
  const VorticityField w0 = random_band_limited(g, 60, 1, 4, 1.0);
  const auto recs = run_ensemble({w0, w0, w0}, p, 2);
  for (int i = 1; i < 3; ++i)
    CHECK((recs[i].final_state().spectral == recs[0].final_state().spectral).all());
}

TEST_CASE("a failed ensemble member is isolated") {
  auto g = make_grid(16, kTwoPi);
  auto g_other = make_grid(32, kTwoPi);
  SimParams p = base_params(g);
  p.t_end = 0.05;
  std::vector<VorticityField> initials = {random_band_limited(g, 1, 1, 4, 1.0),
                                          random_band_limited(g_other, 2, 1, 4, 1.0),
                                          random_band_limited(g, 3, 1, 4, 1.0)};
  const auto recs = run_ensemble(initials, p);
  CHECK_FALSE(recs[0].failed);
  CHECK(recs[1].failed);
  CHECK_FALSE(recs[2].failed);
}

TEST_CASE("params validation rejects bad values") {
  auto g = make_grid(8, kTwoPi);
  SimParams p = base_params(g);
  p.r = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = base_params(g);
  p.nu = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = base_params(g);
  p.dt = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = base_params(g);
  p.p_list = {3};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
