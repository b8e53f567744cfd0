#ifndef ARENA_PROBLEMS_HPP
#define ARENA_PROBLEMS_HPP

#include <span>
#include <string>

#include "arena/common.hpp"

namespace arena {

/// Manufactured solutions: an oscillatory field needing uniform resolution and a
/// spherical-layer field needing local refinement.
struct TestCase {
  enum class Kind { kOscillatory, kLayer };
  Kind kind = Kind::kOscillatory;
  int k = 1;                     // oscillatory wavenumber
  double alpha = 10.0;           // layer sharpness
  double radius = 0.25;          // layer sphere radius
  Vec3 center{0.5, 0.5, 0.5};

  static TestCase oscillatory(int k);
  static TestCase layer(double alpha, double radius = 0.25, const Vec3& center = {0.5, 0.5, 0.5});

  /// "osc:k=8" or "layer:alpha=10[,r=0.25]"
  static TestCase parse(const std::string& s);
  std::string str() const;
};

double exact_u(const TestCase& tc, const Vec3& x);
double exact_f(const TestCase& tc, const Vec3& x);

/// max |u_num + c - u_exact| / max |u_exact| over the samples, with c aligning the
/// means over the sample set (periodic gauge). Optionally reports c.
double linf_rel_error(const std::function<double(const Vec3&)>& u_num, const TestCase& tc,
                      std::span<const Vec3> samples, double* gauge_shift = nullptr);

/// Halton low-discrepancy points in the unit cube (bases 2,3,5), deterministic.
std::vector<Vec3> halton_points(int n, int skip = 20);

} // namespace arena

#endif
