#include "ekeu/norms.hpp"

#include "ekeu/operators.hpp"
#include "ekeu/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace ekeu;

TEST_CASE("closed-form norms of w = cos y on [0,2pi)^2") {
  auto g = make_grid(64, kTwoPi);
  auto w = VorticityField::from_function(g, [](Real, Real y) { return std::cos(y); });

  CHECK(l2_norm(w) == doctest::Approx(std::sqrt(2.0) * kPi).epsilon(1e-13));
  CHECK(linf_norm(w) == doctest::Approx(1.0).epsilon(1e-13));

  // int cos^4 over the torus = (3/8)(2pi)(2pi); cross-checked by fine
  // quadrature of the integrand.
  const Real exact = std::pow(1.5 * kPi * kPi, 0.25);
  Real quad = 0.0;
  const int m = 4096;
  for (int j = 0; j < m; ++j) quad += std::pow(std::cos(kTwoPi * j / m), 4.0);
  quad *= kTwoPi / m * kTwoPi;
  CHECK(std::pow(quad, 0.25) == doctest::Approx(exact).epsilon(1e-12));
  CHECK(lp_norm(w, 4.0) == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("all norms of the zero field vanish") {
  auto g = make_grid(8, kTwoPi);
  const NormBundle b = norms(VorticityField::zero(g), {2.0, 4.0}, {-1.0, 0.0, 1.0});
  CHECK(b.l2 == 0.0);
  CHECK(b.linf == 0.0);
  CHECK(b.h1_sq == 0.0);
  for (auto& [p, v] : b.lp) CHECK(v == 0.0);
  for (auto& [s, v] : b.hs) CHECK(v == 0.0);
}

TEST_CASE("quadrature L^2 equals Parseval L^2") {
  auto g = make_grid(32, kTwoPi);
  const VorticityField w = random_band_limited(g, 17, 1, 10, 2.5);
  CHECK(lp_norm(w, 2.0) == doctest::Approx(l2_norm(w)).epsilon(1e-13));
}

TEST_CASE("H^1 identity: h1_sq = ||u||^2 + ||curl u||^2") {
  auto g = make_grid(32, kTwoPi);
  const VorticityField w = random_band_limited(g, 23, 1, 8, 1.5);
  const VelocityField u = biot_savart(w);
  const NormBundle bu = norms(u, {});
  CHECK(bu.h1_sq == doctest::Approx(bu.l2 * bu.l2 + l2_norm(w) * l2_norm(w)).epsilon(1e-13));
  CHECK(h1_sq(w) == doctest::Approx(bu.h1_sq).epsilon(1e-12));
}

TEST_CASE("homogeneous Sobolev family") {
  auto g = make_grid(32, kTwoPi);
  // Single mode |m| = 2: hs = |k|^s * l2 for every s.
  const VorticityField w = VorticityField::single_mode(g, 2, 0, Complex(0.5, 0.0));
  const Real l2 = l2_norm(w);
  for (Real s : {-1.0, -0.5, 0.0, 0.5, 1.0})
    CHECK(hs_norm(w, s) == doctest::Approx(std::pow(2.0, s) * l2).epsilon(1e-13));

  CHECK_THROWS_AS(hs_norm(w, 1.5), std::invalid_argument);
  VorticityField with_mean = w;
  with_mean.spectral(0, 0) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(hs_norm(with_mean, -0.5), std::invalid_argument);
  CHECK_NOTHROW(hs_norm(with_mean, 0.5));
}

TEST_CASE("norms reject p < 2") {
  auto g = make_grid(8, kTwoPi);
  const VorticityField w = VorticityField::single_mode(g, 1, 0, Complex(1.0, 0.0));
  CHECK_THROWS_AS(lp_norm(w, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(norms(w, {1.5}), std::invalid_argument);
}

TEST_CASE("interpolation bound ||w||_p <= ||w||_2^{2/p} ||w||_inf^{1-2/p}") {
  auto g = make_grid(48, kTwoPi);
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    const VorticityField w = random_band_limited(g, seed, 1, 14, 3.0);
    const Real l2 = lp_norm(w, 2.0);
    const Real linf = linf_norm(w);
    for (Real p : {2.0, 4.0, 6.0, 8.0, 16.0}) {
      const Real bound = std::pow(l2, 2.0 / p) * std::pow(linf, 1.0 - 2.0 / p);
      CHECK(lp_norm(w, p) <= bound + 1e-10);
    }
  }
}

TEST_CASE("elliptic regularity ratio ||grad u||_p / (p ||w||_p) stays bounded in p") {
  auto g = make_grid(64, kTwoPi);
  for (std::uint64_t seed : {7u, 8u}) {
    const VorticityField w = random_band_limited(g, seed, 1, 20, 4.0);
    const VelocityField u = biot_savart(w);
    const RealField d11 = g->fft->inverse(ddx(*g, u.u1h));
    const RealField d12 = g->fft->inverse(ddy(*g, u.u1h));
    const RealField d21 = g->fft->inverse(ddx(*g, u.u2h));
    const RealField d22 = g->fft->inverse(ddy(*g, u.u2h));
    const RealField grad_mag =
        (d11.square() + d12.square() + d21.square() + d22.square()).sqrt();
    for (Real p : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
      const Real grad_lp =
          std::pow(g->cell_area() * grad_mag.pow(p).sum(), 1.0 / p);
      const Real ratio = grad_lp / (p * lp_norm(w, p));
      CHECK(ratio < 1.0);  // constant independent of p
    }
  }
}

TEST_CASE("E_p norm assembles L^2 of u and L^p of curl u") {
  auto g = make_grid(32, kTwoPi);
  const VorticityField w = random_band_limited(g, 3, 1, 6, 2.0);
  CHECK(ep_norm(w, 4.0) ==
        doctest::Approx(std::sqrt(velocity_l2_sq(w)) + lp_norm(w, 4.0)).epsilon(1e-14));
}

TEST_CASE("velocity inner product matches (u_a, u_b) computed pointwise") {
  auto g = make_grid(32, kTwoPi);
  const VorticityField a = random_band_limited(g, 31, 1, 9, 1.0);
  const VorticityField b = random_band_limited(g, 32, 1, 9, 1.0);
  const VelocityField ua = biot_savart(a);
  const VelocityField ub = biot_savart(b);
  const Real quad = g->cell_area() * (ua.u1_physical() * ub.u1_physical() +
                                      ua.u2_physical() * ub.u2_physical())
                                         .sum();
  CHECK(velocity_inner(a, b) == doctest::Approx(quad).epsilon(1e-12));
}
