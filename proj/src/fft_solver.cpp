#include "arena/fft_solver.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

namespace arena {

// FFTW planners are not thread-safe
static std::mutex g_fftw_mutex;

std::vector<std::complex<double>> dft3_forward(const GridField& g) {
  const int n = g.n;
  std::vector<std::complex<double>> in(g.size()), out(g.size());
  for (size_t i = 0; i < g.size(); ++i) in[i] = g.data[i];
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    plan = fftw_plan_dft_3d(n, n, n, reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

GridField dft3_inverse(const std::vector<std::complex<double>>& spec, int n) {
  if (spec.size() != size_t(n) * n * n) throw std::invalid_argument("dft3_inverse: size mismatch");
  std::vector<std::complex<double>> in(spec), out(spec.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    plan = fftw_plan_dft_3d(n, n, n, reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
  }
  GridField g(n);
  const double scale = 1.0 / double(spec.size());
  for (size_t i = 0; i < spec.size(); ++i) g.data[i] = out[i].real() * scale;
  return g;
}

GridField poisson_spectral_solve(const GridField& f) {
  const int n = f.n;
  const int nc = n / 2 + 1;
  std::vector<double> in(f.data);
  std::vector<std::complex<double>> spec(size_t(n) * n * nc);
  fftw_plan fwd, bwd;
  GridField u(n);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fwd = fftw_plan_dft_r2c_3d(n, n, n, in.data(), reinterpret_cast<fftw_complex*>(spec.data()),
                               FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_3d(n, n, n, reinterpret_cast<fftw_complex*>(spec.data()), u.data.data(),
                               FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  const double four_pi2 = 4.0 * M_PI * M_PI;
  const double scale = 1.0 / (double(n) * n * n);
  for (int i = 0; i < n; ++i) {
    const double ki = signed_freq(i, n);
    for (int j = 0; j < n; ++j) {
      const double kj = signed_freq(j, n);
      for (int k = 0; k < nc; ++k) {
        const double kk = k;   // r2c keeps only the non-negative half along z
        const size_t idx = (size_t(i) * n + j) * nc + k;
        const double k2 = ki * ki + kj * kj + kk * kk;
        spec[idx] *= (k2 == 0.0) ? 0.0 : scale / (four_pi2 * k2);
      }
    }
  }
  fftw_execute(bwd);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  return u;
}

SpectralInterpolant SpectralInterpolant::build(const GridField& g, double rel_cut) {
  const auto spec = dft3_forward(g);
  const int n = g.n;
  double amax = 0;
  for (const auto& c : spec) amax = std::max(amax, std::abs(c));
  SpectralInterpolant si;
  const double cut = amax * rel_cut;
  const double scale = 1.0 / double(spec.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& c = spec[(size_t(i) * n + j) * n + k];
        if (std::abs(c) > cut)
          si.modes.push_back({signed_freq(i, n), signed_freq(j, n), signed_freq(k, n), c * scale});
      }
  return si;
}

double SpectralInterpolant::operator()(const Vec3& x) const {
  double s = 0;
  for (const Mode& m : modes) {
    const double phase = 2.0 * M_PI * (m.kx * x[0] + m.ky * x[1] + m.kz * x[2]);
    s += m.amp.real() * std::cos(phase) - m.amp.imag() * std::sin(phase);
  }
  return s;
}

} // namespace arena
