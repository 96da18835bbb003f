#include "ekeu/sim.hpp"

#include "ekeu/operators.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>

namespace ekeu {

void SimParams::validate() const {
  if (!grid) throw std::invalid_argument("SimParams: missing grid");
  if (!(r > 0.0)) throw std::invalid_argument("SimParams: r must be > 0");
  if (!(nu >= 0.0)) throw std::invalid_argument("SimParams: nu must be >= 0");
  if (!(dt > 0.0)) throw std::invalid_argument("SimParams: dt must be > 0");
  if (!(t_end >= 0.0)) throw std::invalid_argument("SimParams: t_end must be >= 0");
  if (record_every < 1) throw std::invalid_argument("SimParams: record_every must be >= 1");
  if (snapshot_every < 0) throw std::invalid_argument("SimParams: snapshot_every must be >= 0");
  for (int p : p_list)
    if (p < 2 || p % 2 != 0)
      throw std::invalid_argument("SimParams: p_list entries must be even and >= 2");
}

namespace {

// Nonlinear-plus-forcing part of the RHS; the linear part is handled by the
// integrating factor.
SpectralField forced_nonlinear(const VorticityField& w, const SimParams& params) {
  SpectralField f = params.linear_only
                        ? SpectralField::Zero(w.grid->n, w.grid->n)
                        : SpectralField(-nonlinear_term(w).spectral);
  if (!params.forcing.is_zero()) f += params.forcing.curl_g.spectral;
  return f;
}

}  // namespace

VorticityField rhs(const VorticityField& w, const SimParams& params) {
  SpectralField out = forced_nonlinear(w, params);
  out -= (params.r + params.nu * params.grid->k2).cast<Complex>() * w.spectral;
  return {w.grid, std::move(out)};
}

Eigen::ArrayXXd linear_symbol(const SpectralGrid& grid, const SimParams& params) {
  return -(params.r + params.nu * grid.k2);
}

Stepper::Stepper(const SimParams& params) : params_(params) {
  const Eigen::ArrayXXd sym = linear_symbol(*params.grid, params);
  exp_full_ = (sym * params.dt).exp();
  exp_half_ = (sym * (0.5 * params.dt)).exp();
}

VorticityField Stepper::advance(const VorticityField& w) const {
  const Real dt = params_.dt;
  const auto& E = exp_full_;
  const auto& E2 = exp_half_;
  const GridPtr& grid = w.grid;

  // Classical RK4 applied to v = exp(-symbol t) w^, written back in w^ form.
  const SpectralField n1 = forced_nonlinear(w, params_);
  const VorticityField wa{grid, (E2 * (w.spectral + (0.5 * dt) * n1)).eval()};
  const SpectralField n2 = forced_nonlinear(wa, params_);
  const VorticityField wb{grid, (E2 * w.spectral + (0.5 * dt) * n2).eval()};
  const SpectralField n3 = forced_nonlinear(wb, params_);
  const VorticityField wc{grid, (E * w.spectral + dt * (E2 * n3)).eval()};
  const SpectralField n4 = forced_nonlinear(wc, params_);

  SpectralField out =
      E * w.spectral + (dt / 6.0) * (E * n1 + 2.0 * (E2 * (n2 + n3)) + n4);
  return {grid, std::move(out)};
}

VorticityField step(const VorticityField& w, const SimParams& params) {
  return Stepper(params).advance(w);
}

namespace {

void record_point(TrajectoryRecord& rec, const VorticityField& w, const SimParams& params,
                  Real t) {
  rec.times.push_back(t);
  const Real u_sq = velocity_l2_sq(w);
  const Real w_l2 = l2_norm(w);
  rec.energy.push_back(u_sq);
  rec.enstrophy.push_back(w_l2 * w_l2);
  rec.h1_sq.push_back(u_sq + w_l2 * w_l2);
  const Real grad_w = hs_norm(w, 1.0);
  rec.palinstrophy.push_back(grad_w * grad_w);

  const RealField phys = w.to_physical();
  const Real cell = w.grid->cell_area();
  rec.linf.push_back(phys.abs().maxCoeff());
  for (std::size_t ip = 0; ip < rec.p_list.size(); ++ip) {
    const Real p = static_cast<Real>(rec.p_list[ip]);
    rec.lp[ip].push_back(p == 2.0 ? std::sqrt(cell * phys.square().sum())
                                  : std::pow(cell * phys.abs().pow(p).sum(), 1.0 / p));
  }

  if (params.forcing.is_zero()) {
    rec.gu.push_back(0.0);
    rec.curlg_w.push_back(0.0);
    for (std::size_t ip = 0; ip < rec.p_list.size(); ++ip) rec.lp_pairing[ip].push_back(0.0);
  } else {
    rec.gu.push_back(velocity_inner(params.forcing.curl_g, w));
    rec.curlg_w.push_back(inner_l2(params.forcing.curl_g, w));
    const RealField curl_g_phys = params.forcing.curl_g.to_physical();
    for (std::size_t ip = 0; ip < rec.p_list.size(); ++ip) {
      const Real p = static_cast<Real>(rec.p_list[ip]);
      const RealField weight =
          (p == 2.0) ? phys : RealField(phys * phys.abs().pow(p - 2.0));
      rec.lp_pairing[ip].push_back(cell * (weight * curl_g_phys).sum());
    }
  }
}

}  // namespace

TrajectoryRecord simulate(const VorticityField& w0, const SimParams& params) {
  params.validate();
  if (w0.grid->n != params.grid->n)
    throw std::invalid_argument("simulate: initial state grid mismatch");

  TrajectoryRecord rec;
  rec.p_list = params.p_list;
  rec.lp.resize(params.p_list.size());
  rec.lp_pairing.resize(params.p_list.size());

  VorticityField w = w0;
  apply_dealias_mask(w);
  w.spectral(0, 0) = Complex(0.0, 0.0);

  const long n_steps = std::lround(params.t_end / params.dt);
  const Stepper stepper(params);
  const Real kmax_phys = params.grid->kmax * kTwoPi / params.grid->L;

  record_point(rec, w, params, 0.0);
  rec.snapshots.emplace_back(0, w);

  for (long s = 1; s <= n_steps; ++s) {
    w = stepper.advance(w);
    const Real t = static_cast<Real>(s) * params.dt;

    if (!w.spectral.allFinite()) {
      rec.failed = true;
      rec.failure = "non-finite state at t = " + std::to_string(t);
      return rec;
    }

    if (s % params.record_every == 0 || s == n_steps) {
      record_point(rec, w, params, t);
      // CFL advisory from the recorded state; violations warn, never abort.
      const Real cfl = params.dt * biot_savart(w).max_speed() * kmax_phys;
      rec.max_cfl = std::max(rec.max_cfl, cfl);
      if (cfl > params.cfl_limit) rec.cfl_warning = true;
    }
    if ((params.snapshot_every > 0 && s % params.snapshot_every == 0) || s == n_steps)
      rec.snapshots.emplace_back(rec.times.size() - 1, w);
  }
  return rec;
}

std::vector<TrajectoryRecord> run_ensemble(const std::vector<VorticityField>& initials,
                                           const SimParams& params, int threads) {
  std::vector<TrajectoryRecord> out(initials.size());
  if (threads < 1) threads = 1;

  auto worker = [&](std::size_t i) {
    try {
      out[i] = simulate(initials[i], params);
    } catch (const std::exception& e) {
      out[i].failed = true;
      out[i].failure = e.what();
    }
  };

  if (threads == 1 || initials.size() <= 1) {
    for (std::size_t i = 0; i < initials.size(); ++i) worker(i);
    return out;
  }

  std::atomic<std::size_t> counter{0};
  std::vector<std::future<void>> pool;
  const std::size_t n_workers = std::min<std::size_t>(threads, initials.size());
  for (std::size_t k = 0; k < n_workers; ++k)
    pool.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        const std::size_t i = counter.fetch_add(1);
        if (i >= out.size()) return;
        worker(i);
      }
    }));
  for (auto& f : pool) f.get();
  return out;
}

}  // namespace ekeu
