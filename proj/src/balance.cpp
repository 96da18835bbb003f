#include "ekeu/balance.hpp"

#include "ekeu/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace ekeu {

const char* law_name(BalanceLaw law) {
  switch (law) {
    case BalanceLaw::energy: return "energy";
    case BalanceLaw::enstrophy: return "enstrophy";
    case BalanceLaw::lp: return "lp";
    case BalanceLaw::h1_envelope: return "h1_envelope";
    case BalanceLaw::absorbing_ball: return "absorbing_ball";
    case BalanceLaw::linf_bound: return "linf_bound";
    case BalanceLaw::lp_attractor_bound: return "lp_attractor_bound";
    case BalanceLaw::wp_yudovich: return "wp_yudovich";
    case BalanceLaw::orthogonality: return "orthogonality";
  }
  return "?";
}

namespace {

Real max_abs(const std::vector<Real>& v) {
  Real m = 0.0;
  for (Real x : v) m = std::max(m, std::abs(x));
  return m;
}

// Derivative by the 3-point stencil on possibly non-uniform times (2nd order;
// reduces to the centered difference for uniform spacing).
Real d_dt(const std::vector<Real>& t, const std::vector<Real>& v, std::size_t i) {
  const Real h1 = t[i] - t[i - 1];
  const Real h2 = t[i + 1] - t[i];
  return (v[i + 1] * h1 * h1 - v[i - 1] * h2 * h2 + v[i] * (h2 * h2 - h1 * h1)) /
         (h1 * h2 * (h1 + h2));
}

// Norm-evolution residual  coef * dV/dt + r V + extra - rhs  on the interior
// record points.
BalanceReport norm_evolution_residual(BalanceLaw law, int p, const std::vector<Real>& times,
                                      const std::vector<Real>& value, Real deriv_coef, Real r,
                                      const std::vector<Real>& extra,
                                      const std::vector<Real>& rhs, Real tol, bool normalize) {
  if (times.size() < 3)
    throw std::invalid_argument("balance residual: need at least 3 record points");
  BalanceReport rep;
  rep.law = law;
  rep.p = p;
  rep.tolerance = tol;

  Real scale = 1.0;
  if (normalize)
    for (Real v : value) scale = std::max(scale, std::abs(r * v));

  for (std::size_t i = 1; i + 1 < times.size(); ++i) {
    const Real resid =
        (deriv_coef * d_dt(times, value, i) + r * value[i] + extra[i] - rhs[i]) / scale;
    rep.times.push_back(times[i]);
    rep.residuals.push_back(resid);
  }
  rep.max_abs_residual = max_abs(rep.residuals);
  rep.pass = rep.max_abs_residual <= tol;
  return rep;
}

std::size_t p_index(const TrajectoryRecord& traj, int p) {
  for (std::size_t i = 0; i < traj.p_list.size(); ++i)
    if (traj.p_list[i] == p) return i;
  throw std::invalid_argument("balance: exponent p was not recorded in the trajectory");
}

}  // namespace

BalanceReport energy_residual(const TrajectoryRecord& traj, const SimParams& params, Real tol,
                              bool normalize) {
  std::vector<Real> extra(traj.size(), 0.0);
  for (std::size_t i = 0; i < traj.size(); ++i) extra[i] = params.nu * traj.enstrophy[i];
  return norm_evolution_residual(BalanceLaw::energy, 0, traj.times, traj.energy, 0.5,
                                 params.r, extra, traj.gu, tol, normalize);
}

BalanceReport enstrophy_residual(const TrajectoryRecord& traj, const SimParams& params,
                                 Real tol, bool normalize) {
  std::vector<Real> extra(traj.size(), 0.0);
  for (std::size_t i = 0; i < traj.size(); ++i) extra[i] = params.nu * traj.palinstrophy[i];
  return norm_evolution_residual(BalanceLaw::enstrophy, 0, traj.times, traj.enstrophy, 0.5,
                                 params.r, extra, traj.curlg_w, tol, normalize);
}

BalanceReport lp_residual(const TrajectoryRecord& traj, const SimParams& params, int p,
                          Real tol, bool normalize) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument("lp_residual: p must be even and >= 2 (quadrature caveat)");
  if (params.nu != 0.0)
    throw std::invalid_argument("lp_residual: the L^p law holds for the inviscid system");
  const std::size_t ip = p_index(traj, p);
  std::vector<Real> value(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i)
    value[i] = std::pow(traj.lp[ip][i], static_cast<Real>(p));
  const std::vector<Real> extra(traj.size(), 0.0);
  return norm_evolution_residual(BalanceLaw::lp, p, traj.times, value,
                                 1.0 / static_cast<Real>(p), params.r, extra,
                                 traj.lp_pairing[ip], tol, normalize);
}

BalanceReport h1_envelope(const TrajectoryRecord& traj, const SimParams& params, Real tol) {
  BalanceReport rep;
  rep.law = BalanceLaw::h1_envelope;
  const Real g1_sq = norms(params.forcing.g, {}).h1_sq;
  const Real h1_0 = traj.h1_sq.empty() ? 0.0 : traj.h1_sq.front();
  rep.tolerance = tol * (1.0 + h1_0);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Real envelope =
        h1_0 * std::exp(-params.r * traj.times[i]) + g1_sq / (params.r * params.r);
    rep.times.push_back(traj.times[i]);
    rep.residuals.push_back(std::max(0.0, traj.h1_sq[i] - envelope));
  }
  rep.max_abs_residual = max_abs(rep.residuals);
  rep.pass = rep.max_abs_residual <= rep.tolerance;
  return rep;
}

BalanceReport absorbing_ball_check(const TrajectoryRecord& traj, const SimParams& params) {
  BalanceReport rep;
  rep.law = BalanceLaw::absorbing_ball;
  const Real g1 = std::sqrt(norms(params.forcing.g, {}).h1_sq);
  const Real h1_0 = traj.h1_sq.empty() ? 0.0 : traj.h1_sq.front();

  if (g1 == 0.0) {
    // Degenerate ball: check exponential decay toward zero instead.
    const Real u1_0 = std::sqrt(h1_0);
    rep.tolerance = 1e-8 * (1.0 + u1_0);
    for (std::size_t i = 0; i < traj.size(); ++i) {
      rep.times.push_back(traj.times[i]);
      rep.residuals.push_back(std::max(
          0.0, std::sqrt(traj.h1_sq[i]) - u1_0 * std::exp(-params.r * traj.times[i])));
    }
    rep.max_abs_residual = max_abs(rep.residuals);
    rep.pass = rep.max_abs_residual <= rep.tolerance;
    rep.note = "g = 0: decay-to-zero special case, entry time 0";
    return rep;
  }

  const Real ball_sq = 2.0 * g1 * g1 / (params.r * params.r);
  // First recorded time after which the trajectory stays inside the ball.
  std::size_t first_inside = traj.size();
  for (std::size_t i = traj.size(); i-- > 0;) {
    if (traj.h1_sq[i] <= ball_sq * (1.0 + 1e-12))
      first_inside = i;
    else
      break;
  }
  for (std::size_t i = 0; i < traj.size(); ++i) {
    rep.times.push_back(traj.times[i]);
    rep.residuals.push_back(std::max(0.0, std::sqrt(traj.h1_sq[i]) - std::sqrt(ball_sq)));
  }
  rep.max_abs_residual = max_abs(rep.residuals);

  const Real entry_bound =
      std::max(0.0, std::log(params.r * params.r * h1_0 / (g1 * g1)) / params.r);
  const Real stride = params.dt * params.record_every;
  if (first_inside == traj.size()) {
    rep.pass = false;
    rep.note = "trajectory never settled inside the absorbing ball";
  } else {
    const Real t_star = traj.times[first_inside];
    rep.pass = t_star <= entry_bound + stride;
    rep.note = "entry time " + std::to_string(t_star) + ", bound " +
               std::to_string(entry_bound) + " + stride " + std::to_string(stride);
    rep.tolerance = entry_bound + stride;
  }
  return rep;
}

std::vector<BalanceReport> attractor_bounds(const TrajectoryRecord& traj,
                                            const SimParams& params,
                                            const std::vector<int>& p_list, bool with_linf,
                                            Real t_burn, Real slack) {
  std::vector<BalanceReport> reports;
  const auto window_max = [&](const std::vector<Real>& series) {
    Real m = 0.0;
    bool seen = false;
    for (std::size_t i = 0; i < traj.size(); ++i)
      if (traj.times[i] >= t_burn) {
        m = seen ? std::max(m, series[i]) : series[i];
        seen = true;
      }
    if (!seen) throw std::invalid_argument("attractor_bounds: empty post-burn-in window");
    return m;
  };

  for (int p : p_list) {
    BalanceReport rep;
    rep.law = BalanceLaw::lp_attractor_bound;
    rep.p = p;
    rep.tolerance = slack;
    const Real bound =
        params.forcing.is_zero()
            ? 0.0
            : lp_norm(params.forcing.curl_g, static_cast<Real>(p)) / params.r;
    const Real observed = window_max(traj.lp[p_index(traj, p)]);
    rep.times = {t_burn};
    rep.residuals = {observed - bound};
    rep.max_abs_residual = std::max(0.0, observed - bound);
    rep.pass = observed <= bound + slack;
    reports.push_back(std::move(rep));
  }
  if (with_linf) {
    BalanceReport rep;
    rep.law = BalanceLaw::linf_bound;
    rep.tolerance = slack;
    const Real bound =
        params.forcing.is_zero() ? 0.0 : linf_norm(params.forcing.curl_g) / params.r;
    const Real observed = window_max(traj.linf);
    rep.times = {t_burn};
    rep.residuals = {observed - bound};
    rep.max_abs_residual = std::max(0.0, observed - bound);
    rep.pass = observed <= bound + slack;
    reports.push_back(std::move(rep));
  }
  return reports;
}

BalanceReport orthogonality_check(const VorticityField& w, bool dealias, Real tol) {
  BalanceReport rep;
  rep.law = BalanceLaw::orthogonality;
  rep.tolerance = tol;
  const VorticityField n = advection_product(w, dealias);
  const Real l2 = l2_norm(w);
  const Real scale = std::sqrt(h1_sq(w)) * l2 * l2;
  rep.times = {0.0, 0.0};
  if (scale == 0.0) {
    rep.residuals = {0.0, 0.0};
    rep.pass = true;
    return rep;
  }
  rep.residuals = {velocity_inner(n, w) / scale,  // ((u.grad)u, u)
                   inner_l2(n, w) / scale};       // ((u.grad)u, Lap u), 2D identity
  rep.max_abs_residual = max_abs(rep.residuals);
  rep.pass = rep.max_abs_residual <= tol;
  return rep;
}

TrajectoryRecord subsample(const TrajectoryRecord& traj, int factor) {
  if (factor < 1) throw std::invalid_argument("subsample: factor must be >= 1");
  TrajectoryRecord out;
  out.p_list = traj.p_list;
  out.lp.resize(traj.lp.size());
  out.lp_pairing.resize(traj.lp_pairing.size());
  out.failed = traj.failed;
  out.failure = traj.failure;
  out.cfl_warning = traj.cfl_warning;
  out.max_cfl = traj.max_cfl;
  for (std::size_t i = 0; i < traj.size(); i += static_cast<std::size_t>(factor)) {
    out.times.push_back(traj.times[i]);
    out.energy.push_back(traj.energy[i]);
    out.enstrophy.push_back(traj.enstrophy[i]);
    out.h1_sq.push_back(traj.h1_sq[i]);
    out.palinstrophy.push_back(traj.palinstrophy[i]);
    out.linf.push_back(traj.linf[i]);
    out.gu.push_back(traj.gu[i]);
    out.curlg_w.push_back(traj.curlg_w[i]);
    for (std::size_t ip = 0; ip < traj.lp.size(); ++ip) {
      out.lp[ip].push_back(traj.lp[ip][i]);
      out.lp_pairing[ip].push_back(traj.lp_pairing[ip][i]);
    }
  }
  return out;
}

}  // namespace ekeu
