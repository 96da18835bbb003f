#pragma once

#include "ekeu/field.hpp"

namespace ekeu {

/// Spectral x-derivative: multiplies by i*kx.
SpectralField ddx(const SpectralGrid& grid, const SpectralField& f);

/// Spectral y-derivative: multiplies by i*ky.
SpectralField ddy(const SpectralGrid& grid, const SpectralField& f);

/// Velocity from vorticity through the stream function: psi solves
/// Lap psi = w and u = (-d2 psi, d1 psi), i.e. u^ = (i ky, -i kx) w^ / |k|^2.
/// Rejects nonzero-mean vorticity (the Poisson solve is not invertible on
/// the torus mean mode). The result is discretely divergence-free and its
/// curl reproduces w.
VelocityField biot_savart(const VorticityField& w);

/// curl u = d1 u2 - d2 u1 as a vorticity field (masked like its input;
/// no extra dealiasing is applied).
VorticityField curl(const VelocityField& u);

/// i (kx u1^ + ky u2^); identically zero to roundoff for constructed fields.
SpectralField divergence(const VelocityField& u);

/// Dealiased pseudo-spectral (u.grad)w with u = biot_savart(w).
/// Input must be dealiased and mean-zero; the result is both.
VorticityField nonlinear_term(const VorticityField& w);

/// Same pointwise evaluation with the output mask optionally disabled.
/// Only tests use dealias=false (aliasing negative controls).
VorticityField advection_product(const VorticityField& w, bool dealias);

/// Direct Galerkin convolution sum of (u.grad)w over the retained modes,
/// O(kmax^4); the validation oracle for nonlinear_term. Rejects n > 32.
VorticityField oracle_nonlinear(const VorticityField& w);

}  // namespace ekeu
