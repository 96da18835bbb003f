#pragma once

#include "ekeu/fft.hpp"
#include "ekeu/types.hpp"

#include <memory>

namespace ekeu {

/// Square periodic torus [0,L)^2 sampled on an n x n collocation grid,
/// with wavenumber tables and the 2/3-rule dealiasing mask.
///
/// Retained modes satisfy |m_x|, |m_y| <= kmax where kmax is the largest
/// integer with 3*kmax < n. This keeps the quadratic term alias-free when
/// products are formed on the n-grid, so the discrete energy/enstrophy
/// orthogonality identities hold to roundoff. The mean mode (0,0) is always
/// retained and the Nyquist modes are always excluded.
struct SpectralGrid {
  int n = 0;
  Real L = 0.0;

  Eigen::ArrayXi modes;    // integer modes in FFT order: 0..n/2-1, -n/2..-1
  Eigen::ArrayXd kx;       // physical wavenumbers (2*pi/L) * modes, x axis
  Eigen::ArrayXd ky;       // same table, y axis (square grid)
  Eigen::ArrayXXd k2;      // |k|^2 per mode
  Eigen::ArrayXXd inv_k2;  // 1/|k|^2, zero at the mean mode
  BoolField dealias_mask;
  SpectralField mask_c;  // dealias mask as a 1/0 complex multiplier
  int kmax = 0;

  std::shared_ptr<const Fft2d> fft;

  /// Array index of integer mode m (valid for -n/2 <= m < n/2).
  int index_of_mode(int m) const { return m >= 0 ? m : m + n; }

  /// Collocation coordinate of sample i.
  Real coord(int i) const { return L * static_cast<Real>(i) / static_cast<Real>(n); }

  /// Quadrature weight of one grid cell, (L/n)^2.
  Real cell_area() const { return (L / n) * (L / n); }
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Builds the grid tables. Rejects odd n, n < 8, and non-positive L.
GridPtr make_grid(int n, Real L);

}  // namespace ekeu
