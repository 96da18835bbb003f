#include "ekeu/norms.hpp"

#include "ekeu/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace ekeu {

namespace {
void require_p(Real p) {
  if (!(p >= 2.0)) throw std::invalid_argument("norms: exponent p must be >= 2");
}

void require_s(Real s) {
  if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("norms: s must lie in [-1,1]");
}

Real quadrature_lp(const RealField& samples, Real p, Real cell_area) {
  if (p == 2.0) return std::sqrt(cell_area * samples.square().sum());
  return std::pow(cell_area * samples.abs().pow(p).sum(), 1.0 / p);
}
}  // namespace

Real l2_norm(const VorticityField& w) {
  return w.grid->L * std::sqrt(w.spectral.abs2().sum());
}

Real lp_norm(const VorticityField& w, Real p) {
  require_p(p);
  return quadrature_lp(w.to_physical(), p, w.grid->cell_area());
}

Real linf_norm(const VorticityField& w) { return w.to_physical().abs().maxCoeff(); }

Real hs_norm(const VorticityField& w, Real s) {
  require_s(s);
  if (s < 0.0 && w.spectral(0, 0) != Complex(0.0, 0.0))
    throw std::invalid_argument("hs_norm: s < 0 requires a zero-mean field");
  const auto& g = *w.grid;
  Real sum = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (i == 0 && j == 0) continue;
      sum += std::pow(g.k2(i, j), s) * std::norm(w.spectral(i, j));
    }
  return g.L * std::sqrt(sum);
}

Real velocity_l2_sq(const VorticityField& w) {
  const auto& g = *w.grid;
  Real sum = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) sum += g.inv_k2(i, j) * std::norm(w.spectral(i, j));
  return g.L * g.L * sum;
}

Real h1_sq(const VorticityField& w) {
  const Real l2 = l2_norm(w);
  return velocity_l2_sq(w) + l2 * l2;
}

NormBundle norms(const VorticityField& w, const std::vector<Real>& p_list,
                 const std::vector<Real>& s_list) {
  NormBundle b;
  b.l2 = std::sqrt(velocity_l2_sq(w));
  const Real wl2 = l2_norm(w);
  b.h1_sq = b.l2 * b.l2 + wl2 * wl2;
  const RealField phys = w.to_physical();
  b.linf = phys.abs().maxCoeff();
  for (Real p : p_list) {
    require_p(p);
    b.lp[p] = quadrature_lp(phys, p, w.grid->cell_area());
  }
  for (Real s : s_list) b.hs[s] = hs_norm(w, s);
  return b;
}

NormBundle norms(const VelocityField& u, const std::vector<Real>& p_list,
                 const std::vector<Real>& s_list) {
  NormBundle b;
  const auto& g = *u.grid;
  b.l2 = g.L * std::sqrt(u.u1h.abs2().sum() + u.u2h.abs2().sum());
  const Real curl_l2 = l2_norm(curl(u));
  b.h1_sq = b.l2 * b.l2 + curl_l2 * curl_l2;
  const RealField speed = (u.u1_physical().square() + u.u2_physical().square()).sqrt();
  b.linf = speed.maxCoeff();
  for (Real p : p_list) {
    require_p(p);
    b.lp[p] = quadrature_lp(speed, p, g.cell_area());
  }
  for (Real s : s_list) {
    require_s(s);
    Real sum = 0.0;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        if (i == 0 && j == 0) continue;
        sum += std::pow(g.k2(i, j), s) * (std::norm(u.u1h(i, j)) + std::norm(u.u2h(i, j)));
      }
    b.hs[s] = g.L * std::sqrt(sum);
  }
  return b;
}

Real inner_l2(const VorticityField& a, const VorticityField& b) {
  const Real sum = (a.spectral * b.spectral.conjugate()).real().sum();
  return a.grid->L * a.grid->L * sum;
}

Real velocity_inner(const VorticityField& a, const VorticityField& b) {
  const auto& g = *a.grid;
  Real sum = 0.0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      sum += g.inv_k2(i, j) * (a.spectral(i, j) * std::conj(b.spectral(i, j))).real();
  return g.L * g.L * sum;
}

Real lp_pairing(const VorticityField& w, const VorticityField& v, Real p) {
  require_p(p);
  const RealField wp = w.to_physical();
  const RealField vp = v.to_physical();
  const RealField weight = (p == 2.0) ? wp : RealField(wp * wp.abs().pow(p - 2.0));
  return w.grid->cell_area() * (weight * vp).sum();
}

Real ep_norm(const VorticityField& w, Real p) {
  return std::sqrt(velocity_l2_sq(w)) + lp_norm(w, p);
}

}  // namespace ekeu
