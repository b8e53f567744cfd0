#ifndef ARENA_FFT_SOLVER_HPP
#define ARENA_FFT_SOLVER_HPP

#include <complex>
#include <vector>

#include "arena/grid.hpp"

namespace arena {

/// Unnormalized forward DFT, ghat_k = sum_x g(x) exp(-2 pi i k.x / n); full n^3 spectrum,
/// same row-major layout as GridField.
std::vector<std::complex<double>> dft3_forward(const GridField& g);

/// Inverse of dft3_forward (includes the 1/n^3 factor).
GridField dft3_inverse(const std::vector<std::complex<double>>& spec, int n);

/// Signed integer frequency for index k on an n-point grid, in (-n/2, n/2].
inline int signed_freq(int k, int n) { return k <= n / 2 ? k : k - n; }

/// Spectral inversion of -Laplace u = f on the periodic unit cube: forward transform,
/// divide by 4 pi^2 |k|^2, zero mode dropped (mean-free gauge), inverse transform.
GridField poisson_spectral_solve(const GridField& f);

/// Sparse trigonometric interpolant of a grid field; keeps modes above rel_cut * max |mode|.
/// Exact for band-limited fields; used to evaluate FFT solutions off the grid.
struct SpectralInterpolant {
  struct Mode {
    int kx, ky, kz;
    std::complex<double> amp;
  };
  std::vector<Mode> modes;

  static SpectralInterpolant build(const GridField& g, double rel_cut = 1e-14);
  double operator()(const Vec3& x) const;
};

} // namespace arena

#endif
