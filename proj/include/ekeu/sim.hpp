#pragma once

#include "ekeu/forcing.hpp"
#include "ekeu/norms.hpp"

#include <string>
#include <vector>

namespace ekeu {

/// Parameters of the damped(-viscous) vorticity equation
///   dw/dt + (u.grad)w + r w = nu Lap w + curl g,   u = biot_savart(w).
struct SimParams {
  GridPtr grid;
  Real r = 1.0;        // Ekman damping rate, > 0
  Real nu = 0.0;       // viscosity; 0 is the damped Euler case
  Real dt = 1e-3;      // step size, > 0
  Real t_end = 1.0;    // horizon, >= 0
  int record_every = 10;
  int snapshot_every = 0;  // field snapshot stride in steps; 0 = first & last
  std::vector<int> p_list = {2, 4, 8};
  ForcingSpec forcing;
  Real cfl_limit = 0.5;
  bool linear_only = false;  // test hook: drop the nonlinear term

  void validate() const;  // throws std::invalid_argument on bad values
};

/// Scalar diagnostics and sparse field snapshots of one run. Scalars are
/// recorded every record_every steps (plus the final step); the balance
/// pairings with the forcing are recorded alongside so every balance law can
/// be evaluated from the series alone.
struct TrajectoryRecord {
  std::vector<Real> times;
  std::vector<Real> energy;        // ||u||^2
  std::vector<Real> enstrophy;     // ||w||^2
  std::vector<Real> h1_sq;         // ||u||^2 + ||w||^2
  std::vector<Real> palinstrophy;  // ||grad w||^2 (viscous balance terms)
  std::vector<Real> linf;          // ||w||_inf
  std::vector<Real> gu;            // (g, u)
  std::vector<Real> curlg_w;       // (curl g, w)
  std::vector<int> p_list;
  std::vector<std::vector<Real>> lp;          // ||w||_p per p in p_list
  std::vector<std::vector<Real>> lp_pairing;  // int w|w|^{p-2} curl g per p

  std::vector<std::pair<std::size_t, VorticityField>> snapshots;  // (time index, field)

  bool failed = false;
  std::string failure;
  bool cfl_warning = false;
  Real max_cfl = 0.0;

  std::size_t size() const { return times.size(); }
  const VorticityField& final_state() const { return snapshots.back().second; }
};

/// Full right-hand side -(u.grad)w - r w + nu Lap w + curl g, dealiased.
VorticityField rhs(const VorticityField& w, const SimParams& params);

/// Per-mode symbol of the linear part, -(r + nu |k|^2); the stepper applies
/// exp(symbol * dt) exactly.
Eigen::ArrayXXd linear_symbol(const SpectralGrid& grid, const SimParams& params);

/// Integrating-factor classical RK4: the linear part is integrated exactly
/// per mode, RK4 handles the transported nonlinearity plus forcing. One
/// Stepper caches the exponential factors for a fixed dt.
class Stepper {
 public:
  explicit Stepper(const SimParams& params);

  VorticityField advance(const VorticityField& w) const;

 private:
  const SimParams& params_;
  Eigen::ArrayXXd exp_full_;  // exp(symbol * dt)
  Eigen::ArrayXXd exp_half_;  // exp(symbol * dt / 2)
};

/// One integrating-factor RK4 step (convenience wrapper around Stepper).
VorticityField step(const VorticityField& w, const SimParams& params);

/// Integrates from w0 to t_end, recording diagnostics. Aborts on NaN/Inf
/// with the partial record flagged failed. Deterministic for fixed inputs.
TrajectoryRecord simulate(const VorticityField& w0, const SimParams& params);

/// Independent runs from several initial states; results match the input
/// order. Members run concurrently when threads > 1; a failed member is
/// flagged without disturbing the others.
std::vector<TrajectoryRecord> run_ensemble(const std::vector<VorticityField>& initials,
                                           const SimParams& params, int threads = 1);

}  // namespace ekeu
