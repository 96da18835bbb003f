#include "ekeu/field.hpp"

#include <stdexcept>

namespace ekeu {

VorticityField VorticityField::zero(const GridPtr& grid) {
  return {grid, SpectralField::Zero(grid->n, grid->n)};
}

VorticityField VorticityField::from_physical(const GridPtr& grid, const RealField& phys,
                                             Real mean_tol) {
  if (phys.rows() != grid->n || phys.cols() != grid->n)
    throw std::invalid_argument("VorticityField::from_physical: size mismatch");
  SpectralField spec = grid->fft->forward(phys);
  const Real mean = std::abs(spec(0, 0));
  if (mean > mean_tol * (1.0 + phys.abs().maxCoeff()))
    throw std::invalid_argument("VorticityField::from_physical: nonzero-mean vorticity");
  spec *= grid->mask_c;
  spec(0, 0) = Complex(0.0, 0.0);
  return {grid, std::move(spec)};
}

VorticityField VorticityField::from_function(const GridPtr& grid,
                                             const std::function<Real(Real, Real)>& w,
                                             Real mean_tol) {
  RealField phys(grid->n, grid->n);
  for (int i = 0; i < grid->n; ++i)
    for (int j = 0; j < grid->n; ++j) phys(i, j) = w(grid->coord(i), grid->coord(j));
  return from_physical(grid, phys, mean_tol);
}

VorticityField VorticityField::single_mode(const GridPtr& grid, int mx, int my, Complex amp) {
  if (mx == 0 && my == 0)
    throw std::invalid_argument("VorticityField::single_mode: mean mode not allowed");
  if (std::abs(mx) > grid->kmax || std::abs(my) > grid->kmax)
    throw std::invalid_argument("VorticityField::single_mode: mode outside dealias band");
  SpectralField spec = SpectralField::Zero(grid->n, grid->n);
  spec(grid->index_of_mode(mx), grid->index_of_mode(my)) = amp;
  spec(grid->index_of_mode(-mx), grid->index_of_mode(-my)) = std::conj(amp);
  return {grid, std::move(spec)};
}

Real VelocityField::max_speed() const {
  const RealField u1 = u1_physical();
  const RealField u2 = u2_physical();
  return (u1.square() + u2.square()).sqrt().maxCoeff();
}

VelocityField VelocityField::zero(const GridPtr& grid) {
  return {grid, SpectralField::Zero(grid->n, grid->n), SpectralField::Zero(grid->n, grid->n)};
}

void apply_dealias_mask(VorticityField& w) { w.spectral *= w.grid->mask_c; }

bool is_dealiased(const VorticityField& w) {
  const auto& g = *w.grid;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (!g.dealias_mask(i, j) && w.spectral(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace ekeu
