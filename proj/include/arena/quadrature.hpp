#ifndef ARENA_QUADRATURE_HPP
#define ARENA_QUADRATURE_HPP

#include <span>
#include <vector>

#include "arena/common.hpp"

namespace arena {

/// Newton kernel 1/(4 pi r); homogeneous of degree -1.
inline double newton_kernel(const Vec3& d) {
  const double r = norm(d);
  return 1.0 / (4.0 * M_PI * r);
}

/// Tuning for the graded tensor-Gauss + Duffy scheme. Defaults reach ~1e-11 relative
/// on touching/self configurations for q <= 14 (see the quadrature tests).
struct QuadSpec {
  int q = 6;                 // basis order (truncated set i+j+k < q)
  double theta = 0.7;        // split a cell when dist(x, cell) < theta * side
  double min_side = 0.5;     // stop grading at this side (source box is [-1,1]^3)
  double theta2 = 1.0;       // 2D grading threshold on Duffy faces
  int n_extra = 0;           // bump every auto-selected Gauss order
  int max_level = 24;        // hard cap on grading depth
};

/// Accumulates I[t][a] += integral over [-1,1]^3 of T_a(y) / (4 pi |x_t - y|) dy for the
/// whole truncated basis; out is row-major (targets x cheb_coeff_count(q)). Targets may
/// lie inside, on, or outside the box; the 1/r singularity is resolved by grading plus
/// pyramid (Duffy) rules at the singular cells.
void newton_potential_box(const QuadSpec& spec, std::span<const Vec3> targets, double* out);

/// Potential of a coefficient vector at targets (source box [-1,1]^3, unit scale).
std::vector<double> newton_potential_apply(const QuadSpec& spec, std::span<const double> coeffs,
                                           std::span<const Vec3> targets);

/// Cached Gauss-Legendre rule.
const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n);

} // namespace arena

#endif
