#pragma once

#include "ekeu/types.hpp"

#include <memory>

namespace ekeu {

/// Two-dimensional complex-to-complex FFT engine for one transform size.
///
/// Plans are created once (FFTW_ESTIMATE, so planning is deterministic and
/// independent of runtime timings) and executed with the new-array interface,
/// which is safe to call concurrently from several threads on the same plan.
/// Forward transforms normalize by 1/n^2 and enforce conjugate symmetry, so
/// forward(f) returns the Fourier coefficients c_k of a real field with
/// f(x) = sum_k c_k exp(i k.x).
class Fft2d {
 public:
  explicit Fft2d(int n);
  ~Fft2d();

  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

  int size() const { return n_; }

  /// Physical samples -> normalized, conjugate-symmetric coefficients.
  SpectralField forward(const RealField& phys) const;

  /// Coefficients -> physical samples (real part; the imaginary part of the
  /// back transform vanishes to roundoff for conjugate-symmetric input).
  RealField inverse(const SpectralField& spec) const;

 private:
  int n_;
  void* plan_fwd_;  // fftw_plan, kept opaque to avoid leaking <fftw3.h>
  void* plan_bwd_;
};

/// Averages c(k) with conj(c(-k)) in place, making the array the exact
/// spectrum of a real field. Self-conjugate modes get a zero imaginary part.
void enforce_conjugate_symmetry(SpectralField& spec);

/// Max |c(k) - conj(c(-k))| over all modes; zero for a symmetric array.
Real conjugate_symmetry_defect(const SpectralField& spec);

}  // namespace ekeu
