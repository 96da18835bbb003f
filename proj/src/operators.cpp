#include "ekeu/operators.hpp"

#include <stdexcept>

namespace ekeu {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_zero_mean(const VorticityField& w, const char* who) {
  if (w.spectral(0, 0) != Complex(0.0, 0.0))
    throw std::invalid_argument(std::string(who) + ": nonzero-mean vorticity");
}
}  // namespace

SpectralField ddx(const SpectralGrid& grid, const SpectralField& f) {
  SpectralField out(grid.n, grid.n);
  for (int i = 0; i < grid.n; ++i) out.row(i) = (kI * grid.kx(i)) * f.row(i);
  return out;
}

SpectralField ddy(const SpectralGrid& grid, const SpectralField& f) {
  SpectralField out(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) out.col(j) = (kI * grid.ky(j)) * f.col(j);
  return out;
}

VelocityField biot_savart(const VorticityField& w) {
  require_zero_mean(w, "biot_savart");
  const auto& g = *w.grid;
  SpectralField u1h(g.n, g.n), u2h(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      const Complex c = w.spectral(i, j) * g.inv_k2(i, j);
      u1h(i, j) = kI * g.ky(j) * c;
      u2h(i, j) = -kI * g.kx(i) * c;
    }
  return {w.grid, std::move(u1h), std::move(u2h)};
}

VorticityField curl(const VelocityField& u) {
  const auto& g = *u.grid;
  SpectralField wh(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      wh(i, j) = kI * (g.kx(i) * u.u2h(i, j) - g.ky(j) * u.u1h(i, j));
  return {u.grid, std::move(wh)};
}

SpectralField divergence(const VelocityField& u) {
  const auto& g = *u.grid;
  SpectralField d(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      d(i, j) = kI * (g.kx(i) * u.u1h(i, j) + g.ky(j) * u.u2h(i, j));
  return d;
}

VorticityField advection_product(const VorticityField& w, bool dealias) {
  require_zero_mean(w, "nonlinear_term");
  const auto& g = *w.grid;
  const VelocityField u = biot_savart(w);

  const RealField u1 = g.fft->inverse(u.u1h);
  const RealField u2 = g.fft->inverse(u.u2h);
  const RealField wx = g.fft->inverse(ddx(g, w.spectral));
  const RealField wy = g.fft->inverse(ddy(g, w.spectral));

  const RealField adv = u1 * wx + u2 * wy;
  SpectralField out = g.fft->forward(adv);
  if (dealias) out *= g.mask_c;
  // Transport of a mean-zero field by a divergence-free field: the mean of
  // (u.grad)w vanishes analytically; pin it to exact zero.
  out(0, 0) = Complex(0.0, 0.0);
  return {w.grid, std::move(out)};
}

VorticityField nonlinear_term(const VorticityField& w) { return advection_product(w, true); }

VorticityField oracle_nonlinear(const VorticityField& w) {
  const auto& g = *w.grid;
  if (g.n > 32) throw std::invalid_argument("oracle_nonlinear: n > 32 (O(n^4) cost)");
  require_zero_mean(w, "oracle_nonlinear");

  const int K = g.kmax;
  SpectralField out = SpectralField::Zero(g.n, g.n);

  // (u.grad w)^(k) = sum_{k1+k2=k} (u^(k1) . i k2) w^(k2) with
  // u^(k1) = i k1_perp w^(k1)/|k1|^2, k1_perp = (k1y, -k1x).
  for (int ox = -K; ox <= K; ++ox)
    for (int oy = -K; oy <= K; ++oy) {
      Complex sum(0.0, 0.0);
      for (int ax = -K; ax <= K; ++ax)
        for (int ay = -K; ay <= K; ++ay) {
          if (ax == 0 && ay == 0) continue;
          const int bx = ox - ax;
          const int by = oy - ay;
          if (std::abs(bx) > K || std::abs(by) > K) continue;
          const Complex wa = w.spectral(g.index_of_mode(ax), g.index_of_mode(ay));
          const Complex wb = w.spectral(g.index_of_mode(bx), g.index_of_mode(by));
          const Real k1_sq = static_cast<Real>(ax) * ax + static_cast<Real>(ay) * ay;
          // (i k1_perp . i k2) = -(k1y*k2x - k1x*k2y); wavenumber scale factors
          // (2 pi / L)^2 from k1_perp and k2 cancel against |k1|^2.
          const Real geom = -(static_cast<Real>(ay) * bx - static_cast<Real>(ax) * by) / k1_sq;
          sum += geom * wa * wb;
        }
      out(g.index_of_mode(ox), g.index_of_mode(oy)) = sum;
    }
  out(0, 0) = Complex(0.0, 0.0);
  return {w.grid, std::move(out)};
}

}  // namespace ekeu
