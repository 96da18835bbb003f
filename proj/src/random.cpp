#include "ekeu/random.hpp"

#include "ekeu/norms.hpp"

#include <random>
#include <stdexcept>

namespace ekeu {

VorticityField random_band_limited(const GridPtr& grid, std::uint64_t seed, int k_min,
                                   int k_max, Real amplitude) {
  if (k_min < 1) throw std::invalid_argument("random_band_limited: k_min must be >= 1");
  if (k_max < k_min) throw std::invalid_argument("random_band_limited: k_max < k_min");

  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> gauss(0.0, 1.0);

  const int K = std::min(k_max, grid->kmax);
  SpectralField spec = SpectralField::Zero(grid->n, grid->n);
  // Fill one half-plane (mx > 0, or mx = 0 and my > 0) and mirror.
  for (int mx = 0; mx <= K; ++mx)
    for (int my = (mx == 0 ? 1 : -K); my <= K; ++my) {
      const Real rad2 = static_cast<Real>(mx) * mx + static_cast<Real>(my) * my;
      if (rad2 < static_cast<Real>(k_min) * k_min || rad2 > static_cast<Real>(K) * K) continue;
      const Complex c(gauss(rng), gauss(rng));
      spec(grid->index_of_mode(mx), grid->index_of_mode(my)) = c;
      spec(grid->index_of_mode(-mx), grid->index_of_mode(-my)) = std::conj(c);
    }

  VorticityField w{grid, std::move(spec)};
  const Real l2 = l2_norm(w);
  if (l2 == 0.0) throw std::invalid_argument("random_band_limited: empty annulus");
  w.spectral *= (amplitude / l2);
  return w;
}

}  // namespace ekeu
