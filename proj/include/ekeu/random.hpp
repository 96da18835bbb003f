#pragma once

#include "ekeu/field.hpp"

#include <cstdint>

namespace ekeu {

/// Mean-zero random vorticity supported on the annulus
/// k_min <= |m| <= k_max (integer mode radius, intersected with the dealias
/// band), with independent Gaussian coefficient amplitudes from the seeded
/// generator, scaled so that ||w||_{L^2} = amplitude. Deterministic for a
/// fixed seed: the mode traversal order is fixed.
VorticityField random_band_limited(const GridPtr& grid, std::uint64_t seed, int k_min,
                                   int k_max, Real amplitude);

}  // namespace ekeu
