#pragma once

#include "ekeu/field.hpp"

#include <cstdint>
#include <string>

namespace ekeu {

enum class ForcingKind { zero, shear, band_limited_random, explicit_field };

/// Time-independent, divergence-free body force g, cached both as a velocity
/// and as its curl (the vorticity-equation source). curl g always has zero
/// mean; div g = 0 holds by construction since g is recovered from curl g by
/// the Biot-Savart law.
struct ForcingSpec {
  ForcingKind kind = ForcingKind::zero;
  Real amplitude = 0.0;
  std::uint64_t seed = 0;
  int k_min = 1;
  int k_max = 1;
  std::string path;  // explicit_field: snapshot the curl was loaded from

  VorticityField curl_g;
  VelocityField g;

  bool is_zero() const { return kind == ForcingKind::zero; }
};

/// g = 0.
ForcingSpec zero_forcing(const GridPtr& grid);

/// curl g = -amplitude * cos(2 pi y / L), i.e. the shear force
/// g = amplitude * (L / 2 pi) * (sin(2 pi y / L), 0); on the default L = 2 pi
/// torus this is g = amplitude * (sin y, 0).
ForcingSpec shear_forcing(const GridPtr& grid, Real amplitude);

/// curl g random band-limited with ||curl g||_{L^2} = amplitude; g by
/// Biot-Savart.
ForcingSpec random_forcing(const GridPtr& grid, std::uint64_t seed, int k_min, int k_max,
                           Real amplitude);

/// Forcing whose curl is the given mean-zero vorticity field.
ForcingSpec explicit_forcing(const GridPtr& grid, VorticityField curl_g,
                             std::string path = {});

}  // namespace ekeu
