#include "ekeu/attractor.hpp"

#include "ekeu/random.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>

namespace ekeu {

namespace {

// FNV-1a over the printable parameter set; enough to fingerprint a config.
std::string fingerprint(const SimParams& p, const HarvestOptions& o) {
  std::string text = std::to_string(p.grid->n) + "|" + std::to_string(p.grid->L) + "|" +
                     std::to_string(p.r) + "|" + std::to_string(p.nu) + "|" +
                     std::to_string(p.dt) + "|" + std::to_string(o.n_init) + "|" +
                     std::to_string(o.seed) + "|" + std::to_string(o.t_burn) + "|" +
                     std::to_string(o.t_collect) + "|" + std::to_string(o.harvest_every);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

AttractorApprox harvest_attractor(const SimParams& params, const HarvestOptions& opts,
                                  int threads) {
  if (opts.n_init < 1) throw std::invalid_argument("harvest_attractor: n_init must be >= 1");
  const Real t_burn = opts.t_burn >= 0.0 ? opts.t_burn : 40.0 / params.r;
  const Real t_collect = opts.t_collect >= 0.0 ? opts.t_collect : 10.0 / params.r;
  const int harvest_every =
      opts.harvest_every > 0 ? opts.harvest_every : 5 * params.record_every;

  SimParams run = params;
  run.t_end = t_burn + t_collect;
  run.snapshot_every = harvest_every;

  std::vector<VorticityField> initials;
  for (int i = 0; i < opts.n_init; ++i)
    initials.push_back(random_band_limited(params.grid, opts.seed + static_cast<unsigned>(i),
                                           opts.ic_k_min, opts.ic_k_max, opts.ic_amplitude));

  const std::vector<TrajectoryRecord> records = run_ensemble(initials, run, threads);

  // Acceptance bounds for harvested sections.
  const Real u_h1_bound =
      params.forcing.is_zero()
          ? 0.0
          : std::sqrt(norms(params.forcing.g, {}).h1_sq) / params.r;
  std::vector<Real> lp_bounds;
  for (int p : params.p_list)
    lp_bounds.push_back(params.forcing.is_zero()
                            ? 0.0
                            : lp_norm(params.forcing.curl_g, static_cast<Real>(p)) / params.r);

  AttractorApprox out;
  out.params_hash = fingerprint(params, opts);
  int alive = 0;
  for (const auto& rec : records) {
    if (rec.failed) continue;
    ++alive;
    for (const auto& [idx, field] : rec.snapshots) {
      const Real t = rec.times[idx];
      if (t < t_burn) continue;
      bool ok = std::sqrt(h1_sq(field)) <= u_h1_bound + opts.bound_slack;
      for (std::size_t ip = 0; ok && ip < lp_bounds.size(); ++ip)
        ok = lp_norm(field, static_cast<Real>(params.p_list[ip])) <=
             lp_bounds[ip] + opts.bound_slack;
      if (!ok) {
        ++out.rejected;
        continue;
      }
      out.sections.push_back(field);
      out.harvest_times.push_back(t);
    }
  }
  if (alive == 0) throw std::runtime_error("harvest_attractor: every member failed");
  return out;
}

Real h1_distance(const VorticityField& a, const VorticityField& b) {
  VorticityField diff{a.grid, SpectralField(a.spectral - b.spectral)};
  return std::sqrt(h1_sq(diff));
}

Real h1_semidistance(const std::vector<VorticityField>& sections,
                     const AttractorApprox& reference) {
  if (reference.sections.empty())
    throw std::invalid_argument("h1_semidistance: empty reference set");
  Real sup = 0.0;
  for (const auto& s : sections) {
    Real best = std::numeric_limits<Real>::infinity();
    for (const auto& ref : reference.sections) best = std::min(best, h1_distance(s, ref));
    sup = std::max(sup, best);
  }
  return sup;
}

Real trajectory_semidistance(const std::vector<TrajectoryRecord>& candidates,
                             const std::vector<TrajectoryRecord>& reference, Real M) {
  if (reference.empty())
    throw std::invalid_argument("trajectory_semidistance: empty reference set");

  const auto window_sup = [M](const TrajectoryRecord& a, const TrajectoryRecord& b) {
    Real sup = 0.0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
      const Real t = a.times[a.snapshots[i].first];
      if (t > M * (1.0 + 1e-12)) break;
      if (i >= b.snapshots.size() ||
          std::abs(b.times[b.snapshots[i].first] - t) > 1e-9 * (1.0 + std::abs(t)))
        throw std::invalid_argument(
            "trajectory_semidistance: recording grids must match exactly");
      sup = std::max(sup, h1_distance(a.snapshots[i].second, b.snapshots[i].second));
      ++matched;
    }
    if (matched == 0)
      throw std::invalid_argument("trajectory_semidistance: no snapshots inside [0, M]");
    return sup;
  };

  Real out = 0.0;
  for (const auto& cand : candidates) {
    Real best = std::numeric_limits<Real>::infinity();
    for (const auto& ref : reference) best = std::min(best, window_sup(cand, ref));
    out = std::max(out, best);
  }
  return out;
}

const VorticityField& snapshot_at(const TrajectoryRecord& traj, Real t) {
  if (traj.snapshots.empty()) throw std::invalid_argument("snapshot_at: no snapshots");
  std::size_t best = 0;
  Real best_dist = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    const Real d = std::abs(traj.times[traj.snapshots[i].first] - t);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return traj.snapshots[best].second;
}

TrajectoryRecord window_trajectory(const TrajectoryRecord& traj, Real t0, Real M,
                                   Real stride_time) {
  TrajectoryRecord out;
  out.p_list = traj.p_list;
  long k = 0;
  for (const auto& [idx, field] : traj.snapshots) {
    const Real t = traj.times[idx];
    if (t < t0 - 1e-9 || t > t0 + M + 1e-9) continue;
    out.times.push_back(static_cast<Real>(k) * stride_time);
    out.snapshots.emplace_back(static_cast<std::size_t>(k), field);
    ++k;
  }
  if (out.snapshots.empty())
    throw std::invalid_argument("window_trajectory: empty window");
  return out;
}

GapSeries yudovich_experiment(const VorticityField& w0, Real delta, const SimParams& params,
                              std::uint64_t perturbation_seed, Real K_factor,
                              Real slack_fraction) {
  if (delta < 0.0) throw std::invalid_argument("yudovich_experiment: delta must be >= 0");

  VorticityField w0b = w0;
  if (delta > 0.0) {
    const VorticityField bump =
        random_band_limited(params.grid, perturbation_seed, 1, params.grid->kmax, delta);
    w0b.spectral += bump.spectral;
  }

  SimParams run = params;
  run.snapshot_every = run.record_every;
  const TrajectoryRecord r1 = simulate(w0, run);
  const TrajectoryRecord r2 = simulate(w0b, run);
  if (r1.failed || r2.failed)
    throw std::runtime_error("yudovich_experiment: member run failed");

  GapSeries out;
  constexpr Real floor = 1e-28;  // squared-distance roundoff floor
  const std::size_t m = std::min(r1.snapshots.size(), r2.snapshots.size());
  for (std::size_t i = 0; i < m; ++i) {
    const Real t = r1.times[r1.snapshots[i].first];
    VorticityField diff{params.grid, SpectralField(r1.snapshots[i].second.spectral -
                                                   r2.snapshots[i].second.spectral)};
    const Real E = velocity_l2_sq(diff);
    if (delta > 0.0 && E < floor && i > 0) {
      out.hit_roundoff_floor = true;
      break;
    }
    out.times.push_back(t);
    out.gap.push_back(E);
  }

  if (delta == 0.0) {
    // Bit-identical runs: the envelope is trivial.
    out.K = 1.0;
    out.C3 = 0.0;
    out.envelope_ok = true;
    for (Real e : out.gap)
      if (e != 0.0) out.envelope_ok = false;
    return out;
  }

  Real max_gap = 0.0;
  for (Real e : out.gap) max_gap = std::max(max_gap, e);
  out.K = K_factor * max_gap;

  // Fit ln ln(K/E(t)) = a - C3 (t - eps) on the recorded points after eps
  // (the first positive time).
  std::vector<Real> ts, ys;
  for (std::size_t i = 1; i < out.gap.size(); ++i) {
    if (out.gap[i] <= 0.0) continue;
    ts.push_back(out.times[i]);
    ys.push_back(std::log(std::log(out.K / out.gap[i])));
  }
  if (ts.size() < 3) throw std::runtime_error("yudovich_experiment: too few gap samples");

  Real t_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    t_mean += ts[i];
    y_mean += ys[i];
  }
  t_mean /= ts.size();
  y_mean /= ys.size();
  Real num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += (ts[i] - t_mean) * (ys[i] - y_mean);
    den += (ts[i] - t_mean) * (ts[i] - t_mean);
  }
  const Real slope = num / den;
  out.C3 = -slope;  // envelope: y(t) >= y(eps) - C3 (t - eps)

  Real y_min = ys.front(), y_max = ys.front();
  for (Real y : ys) {
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  const Real slack = slack_fraction * std::max(y_max - y_min, 1.0);

  const Real eps = ts.front();
  const Real y_eps = ys.front();
  out.envelope_ok = true;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (ys[i] < y_eps - out.C3 * (ts[i] - eps) - slack) {
      out.envelope_ok = false;
      break;
    }
  return out;
}

std::vector<std::pair<Real, Real>> vanishing_viscosity(const VorticityField& w0,
                                                       const SimParams& params_base,
                                                       const std::vector<Real>& nu_list,
                                                       int threads) {
  SimParams inviscid = params_base;
  inviscid.nu = 0.0;
  inviscid.snapshot_every = 0;  // final state only
  const TrajectoryRecord ref = simulate(w0, inviscid);
  if (ref.failed) throw std::runtime_error("vanishing_viscosity: inviscid run failed");
  const VorticityField& ref_final = ref.final_state();

  std::vector<std::pair<Real, Real>> out(nu_list.size());
  const auto member = [&](std::size_t i) {
    SimParams viscous = params_base;
    viscous.nu = nu_list[i];
    viscous.snapshot_every = 0;
    if (viscous.forcing.kind == ForcingKind::shear)
      // Keep the manufactured shear steady state exact at every nu.
      viscous.forcing = shear_forcing(
          viscous.grid, viscous.forcing.amplitude * (viscous.r + viscous.nu) / viscous.r);
    const TrajectoryRecord rec = simulate(w0, viscous);
    if (rec.failed) throw std::runtime_error("vanishing_viscosity: viscous run failed");
    out[i] = {nu_list[i], h1_distance(rec.final_state(), ref_final)};
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < nu_list.size(); ++i) member(i);
  } else {
    std::vector<std::future<void>> pool;
    for (std::size_t i = 0; i < nu_list.size(); ++i)
      pool.push_back(std::async(std::launch::async, member, i));
    for (auto& f : pool) f.get();
  }
  return out;
}

Real dim_bound(const ForcingSpec& g, Real nu, Real r, Real s) {
  if (!(nu > 0.0)) throw std::invalid_argument("dim_bound: nu must be > 0 (viscous bound)");
  if (!(r > 0.0)) throw std::invalid_argument("dim_bound: r must be > 0");
  if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("dim_bound: s must be in [-1,1]");

  const Real a = std::abs(s);
  const Real sqrt3 = std::sqrt(3.0);
  // |s| = 1 uses the closed-form limit of the prefactor.
  const Real prefactor =
      (a == 1.0) ? 1.0 / (16.0 * sqrt3)
                 : (1.0 - s * s) / (64.0 * sqrt3) * std::pow((1.0 + a) / (1.0 - a), a);

  const NormBundle b = norms(g.g, {}, {s});
  const Real gs = b.hs.at(s);
  return prefactor * gs * gs / (std::pow(r, 2.0 + s) * std::pow(nu, 2.0 - s));
}

Real dim_bound_classic(const ForcingSpec& g, Real nu, Real r) {
  if (!(nu > 0.0)) throw std::invalid_argument("dim_bound_classic: nu must be > 0");
  if (!(r > 0.0)) throw std::invalid_argument("dim_bound_classic: r must be > 0");
  const NormBundle b = norms(g.g, {}, {1.0});
  const Real grad_g = b.hs.at(1.0);
  return 0.375 * grad_g * grad_g / (nu * r * r * r);
}

}  // namespace ekeu
