#pragma once

#include "ekeu/sim.hpp"

namespace ekeu {

enum class BalanceLaw {
  energy,
  enstrophy,
  lp,
  h1_envelope,
  absorbing_ball,
  linf_bound,
  lp_attractor_bound,
  wp_yudovich,
  orthogonality,
};

const char* law_name(BalanceLaw law);

/// One balance law evaluated over a trajectory: a residual series with its
/// verdict against the configured tolerance.
struct BalanceReport {
  BalanceLaw law = BalanceLaw::energy;
  int p = 0;  // exponent for the L^p laws, 0 otherwise
  std::vector<Real> times;
  std::vector<Real> residuals;
  Real max_abs_residual = 0.0;
  Real tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Defaults from the stride-convergence studies on the reference
/// configuration; every caller can override.
inline constexpr Real kBalanceTol = 1e-5;
inline constexpr Real kEnvelopeTol = 1e-10;
inline constexpr Real kBoundSlack = 1e-6;

/// Energy balance  1/2 d/dt||u||^2 + r||u||^2 + nu||w||^2 = (g,u).
/// The time derivative uses a centered 3-point stencil on the recorded
/// times; endpoints are excluded from the verdict. Residuals are normalized
/// by max(1, max_t r||u||^2) unless normalize = false.
BalanceReport energy_residual(const TrajectoryRecord& traj, const SimParams& params,
                              Real tol = kBalanceTol, bool normalize = true);

/// Enstrophy balance  1/2 d/dt||w||^2 + r||w||^2 + nu||grad w||^2 = (w, curl g).
BalanceReport enstrophy_residual(const TrajectoryRecord& traj, const SimParams& params,
                                 Real tol = kBalanceTol, bool normalize = true);

/// L^p balance  (1/p) d/dt||w||_p^p + r||w||_p^p = int w|w|^{p-2} curl g.
/// p must be even, recorded in the trajectory, and the run inviscid.
BalanceReport lp_residual(const TrajectoryRecord& traj, const SimParams& params, int p,
                          Real tol = 1e-4, bool normalize = true);

/// Dissipative envelope ||u(t)||_1^2 <= ||u(0)||_1^2 e^{-rt} + r^{-2}||g||_1^2;
/// residuals are the positive violations, tolerance tol*(1+||u(0)||_1^2).
BalanceReport h1_envelope(const TrajectoryRecord& traj, const SimParams& params,
                          Real tol = kEnvelopeTol);

/// Absorbing-ball entry: first recorded time t* after which ||u||_1 stays
/// inside R0 = sqrt(2) r^{-1} ||g||_1, compared against the entry-time bound
/// (1/r) ln(r^2 ||u(0)||_1^2 / ||g||_1^2) plus one recording stride. With
/// g = 0 the ball degenerates and the check becomes exponential decay toward
/// zero (documented special case).
BalanceReport absorbing_ball_check(const TrajectoryRecord& traj, const SimParams& params);

/// Attractor bounds after burn-in: max_{t >= t_burn} ||w||_p against
/// r^{-1}||curl g||_p for each p (plus L^inf when with_linf), slack added.
std::vector<BalanceReport> attractor_bounds(const TrajectoryRecord& traj,
                                            const SimParams& params,
                                            const std::vector<int>& p_list, bool with_linf,
                                            Real t_burn, Real slack = kBoundSlack);

/// Discrete orthogonality of the advection term on one state: residuals are
/// [ ((u.grad)u, u), ((u.grad)u, Lap u) ] relative to ||u||_1 ||w||^2.
/// dealias = false evaluates without the mask (aliasing negative control).
BalanceReport orthogonality_check(const VorticityField& w, bool dealias = true,
                                  Real tol = 1e-12);

/// Every factor-th record point of the scalar series (snapshots dropped);
/// used by the stride-convergence studies.
TrajectoryRecord subsample(const TrajectoryRecord& traj, int factor);

}  // namespace ekeu
