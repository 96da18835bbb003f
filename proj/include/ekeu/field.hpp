#pragma once

#include "ekeu/grid.hpp"

#include <functional>

namespace ekeu {

/// Scalar vorticity in spectral representation. The solver keeps every
/// vorticity field dealiased, conjugate-symmetric, and mean-zero; the
/// constructors below establish those invariants and the operators preserve
/// them.
struct VorticityField {
  GridPtr grid;
  SpectralField spectral;

  VorticityField() = default;
  VorticityField(GridPtr g, SpectralField s) : grid(std::move(g)), spectral(std::move(s)) {}

  Real mean() const { return spectral(0, 0).real(); }

  /// Coefficient of integer mode (mx, my).
  Complex coeff(int mx, int my) const {
    return spectral(grid->index_of_mode(mx), grid->index_of_mode(my));
  }

  RealField to_physical() const { return grid->fft->inverse(spectral); }

  static VorticityField zero(const GridPtr& grid);

  /// Spectral transform of physical samples, dealiased and symmetrized.
  /// Rejects data whose mean exceeds mean_tol * (1 + max|w|); below that the
  /// mean coefficient is zeroed exactly.
  static VorticityField from_physical(const GridPtr& grid, const RealField& phys,
                                      Real mean_tol = 1e-12);

  /// Evaluates w(x,y) at the collocation points and transforms.
  static VorticityField from_function(const GridPtr& grid,
                                      const std::function<Real(Real, Real)>& w,
                                      Real mean_tol = 1e-12);

  /// Field with a single conjugate pair of modes: amp * exp(i k.x) + c.c.
  /// (mx, my) must be a retained non-mean mode.
  static VorticityField single_mode(const GridPtr& grid, int mx, int my, Complex amp);
};

/// Divergence-free velocity in spectral representation.
struct VelocityField {
  GridPtr grid;
  SpectralField u1h, u2h;

  VelocityField() = default;
  VelocityField(GridPtr g, SpectralField a, SpectralField b)
      : grid(std::move(g)), u1h(std::move(a)), u2h(std::move(b)) {}

  RealField u1_physical() const { return grid->fft->inverse(u1h); }
  RealField u2_physical() const { return grid->fft->inverse(u2h); }

  /// Pointwise speed max over the collocation grid.
  Real max_speed() const;

  static VelocityField zero(const GridPtr& grid);
};

/// Zeroes all modes outside the dealias mask.
void apply_dealias_mask(VorticityField& w);

/// True iff every masked-out coefficient is exactly zero.
bool is_dealiased(const VorticityField& w);

}  // namespace ekeu
