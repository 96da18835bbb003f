#include "ekeu/grid.hpp"

#include <stdexcept>

namespace ekeu {

GridPtr make_grid(int n, Real L) {
  if (n < 8) throw std::invalid_argument("make_grid: n must be >= 8");
  if (n % 2 != 0) throw std::invalid_argument("make_grid: n must be even");
  if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be > 0");

  auto grid = std::make_shared<SpectralGrid>();
  grid->n = n;
  grid->L = L;

  grid->modes.resize(n);
  for (int i = 0; i < n; ++i) grid->modes(i) = (i < n / 2) ? i : i - n;

  const Real scale = kTwoPi / L;
  grid->kx = grid->modes.cast<Real>() * scale;
  grid->ky = grid->kx;

  grid->k2.resize(n, n);
  grid->inv_k2.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Real k2 = grid->kx(i) * grid->kx(i) + grid->ky(j) * grid->ky(j);
      grid->k2(i, j) = k2;
      grid->inv_k2(i, j) = (k2 > 0.0) ? 1.0 / k2 : 0.0;
    }

  // Largest band with 3*kmax < n; strict inequality keeps the n-grid
  // evaluation of quadratic products alias-free on every retained mode.
  grid->kmax = (n - 1) / 3;

  grid->dealias_mask.resize(n, n);
  grid->mask_c.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool keep = std::abs(grid->modes(i)) <= grid->kmax &&
                        std::abs(grid->modes(j)) <= grid->kmax;
      grid->dealias_mask(i, j) = keep;
      grid->mask_c(i, j) = keep ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }

  grid->fft = std::make_shared<const Fft2d>(n);
  return grid;
}

}  // namespace ekeu
