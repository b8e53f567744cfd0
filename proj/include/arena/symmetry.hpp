#ifndef ARENA_SYMMETRY_HPP
#define ARENA_SYMMETRY_HPP

#include <array>
#include <span>
#include <vector>

#include "arena/common.hpp"

namespace arena {

/// Signed axis permutation: (g v)[d] = sign[d] * v[perm[d]]. The 48 of them form the
/// symmetry group of the axis-aligned cube.
struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  Vec3 operator()(const Vec3& v) const {
    return {sign[0] * v[perm[0]], sign[1] * v[perm[1]], sign[2] * v[perm[2]]};
  }
  std::array<int, 3> operator()(const std::array<int, 3>& v) const {
    return {sign[0] * v[perm[0]], sign[1] * v[perm[1]], sign[2] * v[perm[2]]};
  }
  SignedPerm inverse() const;
  bool identity() const { return perm == std::array<int, 3>{0, 1, 2} && sign == std::array<int, 3>{1, 1, 1}; }

  static const std::vector<SignedPerm>& all();   // all 48
};

/// Index/sign arrays realizing composition with g on truncated Chebyshev coefficient
/// vectors: if f = sum alpha_a T_a then (f o g) = sum out_a T_a with out = apply(alpha).
struct CoeffCompose {
  std::vector<int> src;        // out[t] = sign[t] * in[src[t]]
  std::vector<double> sign;

  void apply(std::span<const double> in, std::span<double> out) const {
    for (size_t t = 0; t < src.size(); ++t) out[t] = sign[t] * in[src[t]];
  }
  static CoeffCompose make(const SignedPerm& g, int q);
};

/// Permutation realizing g on a g-invariant point set: map[j] = j' with pts[j'] = g(pts[j]).
std::vector<int> point_permutation(const SignedPerm& g, std::span<const Vec3> pts, double tol = 1e-9);

} // namespace arena

#endif
