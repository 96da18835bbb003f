#pragma once

#include "ekeu/field.hpp"

#include <map>
#include <vector>

namespace ekeu {

/// Norm collection for one field. h1_sq is always l2^2 of the velocity plus
/// l2^2 of its curl, whichever representation the field came from.
struct NormBundle {
  Real l2 = 0.0;
  Real linf = 0.0;
  Real h1_sq = 0.0;
  std::map<Real, Real> lp;  // exponent -> L^p norm
  std::map<Real, Real> hs;  // s in [-1,1] -> homogeneous Sobolev seminorm
};

/// L^2 norm of the scalar field, by Parseval.
Real l2_norm(const VorticityField& w);

/// L^p norm by rectangle-rule quadrature on the collocation grid; exact for
/// p = 2 and spectrally accurate for the other even exponents. p >= 2.
Real lp_norm(const VorticityField& w, Real p);

/// Max |w| over the collocation grid.
Real linf_norm(const VorticityField& w);

/// Homogeneous Sobolev seminorm, s in [-1,1]; s < 0 requires zero mean.
Real hs_norm(const VorticityField& w, Real s);

/// ||u||^2 of the velocity induced by w (the Hdot^{-1} seminorm squared).
Real velocity_l2_sq(const VorticityField& w);

/// ||u||^2 + ||w||^2 for the induced velocity: the H^1 norm squared.
Real h1_sq(const VorticityField& w);

/// Norm bundle for a vorticity field. lp/linf are norms of w itself; l2 and
/// h1_sq describe the induced velocity (l2 = ||u||, h1_sq = ||u||^2+||w||^2).
NormBundle norms(const VorticityField& w, const std::vector<Real>& p_list,
                 const std::vector<Real>& s_list = {});

/// Norm bundle for a velocity field: l2/lp/linf of |u|, h1_sq = l2^2 +
/// ||curl u||^2, hs of the vector field.
NormBundle norms(const VelocityField& u, const std::vector<Real>& p_list,
                 const std::vector<Real>& s_list = {});

/// L^2 inner products (a, b) by Parseval.
Real inner_l2(const VorticityField& a, const VorticityField& b);

/// (u_a, u_b) for the velocities induced by two vorticities.
Real velocity_inner(const VorticityField& a, const VorticityField& b);

/// Collocation quadrature of  w |w|^{p-2} v  (the L^p balance pairing).
Real lp_pairing(const VorticityField& w, const VorticityField& v, Real p);

/// E_p norm ||u||_{L^2} + ||curl u||_{L^p} of the velocity induced by w.
Real ep_norm(const VorticityField& w, Real p);

}  // namespace ekeu
