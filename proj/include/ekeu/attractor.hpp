#pragma once

#include "ekeu/balance.hpp"

#include <cstdint>

namespace ekeu {

/// Finite harvest of near-attractor states: sections of long seeded runs
/// taken after burn-in, pre-filtered by the attractor bounds.
struct AttractorApprox {
  std::vector<VorticityField> sections;
  std::vector<Real> harvest_times;
  std::string params_hash;
  int rejected = 0;  // sections that violated the bounds beyond slack
};

/// Gap evolution E(t) = ||u1(t) - u2(t)||^2 of a perturbed pair, with the
/// fitted double-exponential envelope E(t) <= K (E(eps)/K)^{exp(-C3 (t-eps))}.
struct GapSeries {
  std::vector<Real> times;
  std::vector<Real> gap;  // E(t)
  Real C3 = 0.0;          // fitted decay rate of ln ln(K/E)
  Real K = 0.0;           // envelope constant, > max E
  bool envelope_ok = false;
  bool hit_roundoff_floor = false;
};

struct HarvestOptions {
  int n_init = 1;
  std::uint64_t seed = 1;
  Real t_burn = -1.0;     // < 0: 40 / r
  Real t_collect = -1.0;  // < 0: 10 / r
  int harvest_every = -1; // steps; < 0: 5 * record_every
  Real ic_amplitude = 1.0;
  int ic_k_min = 1;
  int ic_k_max = 4;
  Real bound_slack = 1e-3;  // filter slack on the harvested sections
};

/// Runs n_init seeded trajectories to t_burn and harvests sections every
/// harvest_every steps up to t_burn + t_collect. Sections violating the
/// L^p / H^1 attractor bounds beyond the slack are rejected with a note.
/// Throws if every member failed.
AttractorApprox harvest_attractor(const SimParams& params, const HarvestOptions& opts,
                                  int threads = 1);

/// H^1 distance between two states (through their induced velocities).
Real h1_distance(const VorticityField& a, const VorticityField& b);

/// Hausdorff semidistance in H^1: max over sections of the min distance to
/// the reference set. Empty sections give 0; an empty reference throws.
Real h1_semidistance(const std::vector<VorticityField>& sections,
                     const AttractorApprox& reference);

/// Semidistance between trajectory sets in C([0,M]; H^1): max over candidates
/// of min over references of the sup of H^1 distances at matched record
/// times in [0, M]. Recording grids must match exactly.
Real trajectory_semidistance(const std::vector<TrajectoryRecord>& candidates,
                             const std::vector<TrajectoryRecord>& reference, Real M);

/// The snapshot nearest to time t (must land within one snapshot stride).
const VorticityField& snapshot_at(const TrajectoryRecord& traj, Real t);

/// Shifted sub-trajectory: the snapshots with times in [t0, t0 + M], re-based
/// to canonical times k * stride so windows cut from different absolute
/// offsets compare bitwise-equal time grids. Scalar series are not carried.
TrajectoryRecord window_trajectory(const TrajectoryRecord& traj, Real t0, Real M,
                                   Real stride_time);

/// Perturbation-growth experiment behind the uniqueness theorem: runs the
/// pair (w0, w0 + delta-perturbation), fits C3 by least squares on
/// ln ln(K / E(t)) with K = K_factor * max E, and checks the fitted envelope
/// with the given slack fraction of the ln ln dynamic range.
GapSeries yudovich_experiment(const VorticityField& w0, Real delta, const SimParams& params,
                              std::uint64_t perturbation_seed = 1, Real K_factor = 10.0,
                              Real slack_fraction = 0.05);

/// H^1 distance at time t_end between the nu-viscous run and the inviscid
/// run from the same state, for each nu. When the forcing is the shear kind
/// the amplitude is adjusted to r+nu per member so the manufactured steady
/// state persists for every nu; other forcings are used unchanged.
std::vector<std::pair<Real, Real>> vanishing_viscosity(const VorticityField& w0,
                                                       const SimParams& params_base,
                                                       const std::vector<Real>& nu_list,
                                                       int threads = 1);

/// Attractor fractal-dimension bound from the homogeneous Sobolev family,
///   (1-s^2)/(64 sqrt 3) ((1+|s|)/(1-|s|))^{|s|} ||g||_{Hdot^s}^2 / (r^{2+s} nu^{2-s}),
/// with the closed prefactor 1/(16 sqrt 3) at |s| = 1. Requires nu > 0 and
/// s in [-1, 1].
Real dim_bound(const ForcingSpec& g, Real nu, Real r, Real s);

/// The classical viscous bound (3/8) ||grad g||^2 / (nu r^3).
Real dim_bound_classic(const ForcingSpec& g, Real nu, Real r);

}  // namespace ekeu
