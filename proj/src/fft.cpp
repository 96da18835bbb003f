#include "ekeu/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace ekeu {

namespace {
// FFTW plan creation is not thread safe; execution with the new-array
// interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2d::Fft2d(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Fft2d: transform size must be >= 2");
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_complex* in = fftw_alloc_complex(static_cast<size_t>(n) * n);
  fftw_complex* out = fftw_alloc_complex(static_cast<size_t>(n) * n);
  // Both axes have length n and the 2D DFT is separable, so the plan works
  // unchanged on Eigen's column-major storage. FFTW_UNALIGNED lets the plans
  // run on arbitrary caller buffers.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_fwd_ = fftw_plan_dft_2d(n, n, in, out, FFTW_FORWARD, flags);
  plan_bwd_ = fftw_plan_dft_2d(n, n, in, out, FFTW_BACKWARD, flags);
  fftw_free(in);
  fftw_free(out);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft2d: planning failed");
}

Fft2d::~Fft2d() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

SpectralField Fft2d::forward(const RealField& phys) const {
  if (phys.rows() != n_ || phys.cols() != n_)
    throw std::invalid_argument("Fft2d::forward: field size mismatch");
  SpectralField in = phys.cast<Complex>();
  SpectralField out(n_, n_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  out /= static_cast<Real>(n_) * static_cast<Real>(n_);
  enforce_conjugate_symmetry(out);
  return out;
}

RealField Fft2d::inverse(const SpectralField& spec) const {
  if (spec.rows() != n_ || spec.cols() != n_)
    throw std::invalid_argument("Fft2d::inverse: field size mismatch");
  SpectralField in = spec;  // fftw_execute_dft may scribble on its input
  SpectralField out(n_, n_);
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out.real();
}

void enforce_conjugate_symmetry(SpectralField& spec) {
  const int n = static_cast<int>(spec.rows());
  for (int a = 0; a < n; ++a) {
    const int a2 = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      const int b2 = (n - b) % n;
      if (a == a2 && b == b2) {
        spec(a, b) = Complex(spec(a, b).real(), 0.0);
      } else if (a < a2 || (a == a2 && b < b2)) {
        const Complex avg = 0.5 * (spec(a, b) + std::conj(spec(a2, b2)));
        spec(a, b) = avg;
        spec(a2, b2) = std::conj(avg);
      }
    }
  }
}

Real conjugate_symmetry_defect(const SpectralField& spec) {
  const int n = static_cast<int>(spec.rows());
  Real defect = 0.0;
  for (int a = 0; a < n; ++a) {
    const int a2 = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      const int b2 = (n - b) % n;
      defect = std::max(defect, std::abs(spec(a, b) - std::conj(spec(a2, b2))));
    }
  }
  return defect;
}

}  // namespace ekeu
