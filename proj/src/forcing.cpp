#include "ekeu/forcing.hpp"

#include "ekeu/operators.hpp"
#include "ekeu/random.hpp"

namespace ekeu {

namespace {
ForcingSpec from_curl(const GridPtr& grid, VorticityField curl_g) {
  ForcingSpec f;
  f.g = biot_savart(curl_g);
  f.curl_g = std::move(curl_g);
  return f;
}
}  // namespace

ForcingSpec zero_forcing(const GridPtr& grid) {
  ForcingSpec f = from_curl(grid, VorticityField::zero(grid));
  f.kind = ForcingKind::zero;
  return f;
}

ForcingSpec shear_forcing(const GridPtr& grid, Real amplitude) {
  // curl g = -amplitude * cos(2 pi y / L): the conjugate pair (0, +-1) with
  // coefficients -amplitude/2.
  ForcingSpec f = from_curl(
      grid, VorticityField::single_mode(grid, 0, 1, Complex(-0.5 * amplitude, 0.0)));
  f.kind = ForcingKind::shear;
  f.amplitude = amplitude;
  return f;
}

ForcingSpec random_forcing(const GridPtr& grid, std::uint64_t seed, int k_min, int k_max,
                           Real amplitude) {
  ForcingSpec f = from_curl(grid, random_band_limited(grid, seed, k_min, k_max, amplitude));
  f.kind = ForcingKind::band_limited_random;
  f.amplitude = amplitude;
  f.seed = seed;
  f.k_min = k_min;
  f.k_max = k_max;
  return f;
}

ForcingSpec explicit_forcing(const GridPtr& grid, VorticityField curl_g, std::string path) {
  ForcingSpec f = from_curl(grid, std::move(curl_g));
  f.kind = ForcingKind::explicit_field;
  f.path = std::move(path);
  return f;
}

}  // namespace ekeu
