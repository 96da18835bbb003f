#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ekeu {

using Real = double;
using Complex = std::complex<double>;

/// Physical-space samples, indexed (ix, iy) on the collocation grid.
using RealField = Eigen::ArrayXXd;

/// Fourier coefficients of a real field, FFT mode ordering on both axes:
/// index i maps to integer mode m = i for i < n/2 and m = i - n otherwise.
using SpectralField = Eigen::ArrayXXcd;

using BoolField = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884;
inline constexpr Real kTwoPi = 2.0 * kPi;

}  // namespace ekeu
