#include "arena/nodes1d.hpp"

#include <cmath>
#include <stdexcept>

namespace arena {

std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(n, t);
      const double dt = p / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    auto [p, dp] = legendre(n, t);
    (void)p;
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

std::vector<double> lgl_nodes(int p) {
  if (p < 1) throw std::invalid_argument("lgl_nodes: p >= 1 required");
  std::vector<double> x(p + 1);
  x[0] = -1.0;
  x[p] = 1.0;
  for (int i = 1; i < p; ++i) {
    // interior nodes are the roots of P_p'; Chebyshev-Lobatto starting guess
    double t = std::cos(M_PI * (p - i) / p);
    for (int it = 0; it < 100; ++it) {
      auto [pp, dp] = legendre(p, t);
      const double d2p = (2.0 * t * dp - p * (p + 1) * pp) / (1.0 - t * t);
      const double dt = dp / d2p;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
  }
  return x;
}

} // namespace arena
