#include "arena/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "arena/chebyshev.hpp"

namespace arena {

SignedPerm SignedPerm::inverse() const {
  SignedPerm h;
  for (int d = 0; d < 3; ++d) {
    h.perm[perm[d]] = d;
    h.sign[perm[d]] = sign[d];
  }
  return h;
}

const std::vector<SignedPerm>& SignedPerm::all() {
  static const std::vector<SignedPerm> group = [] {
    std::vector<SignedPerm> g;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
      for (int s = 0; s < 8; ++s)
        g.push_back({{p[0], p[1], p[2]}, {(s & 1) ? -1 : 1, (s & 2) ? -1 : 1, (s & 4) ? -1 : 1}});
    return g;
  }();
  return group;
}

CoeffCompose CoeffCompose::make(const SignedPerm& g, int q) {
  // (f o g)(y) = sum_a alpha_a prod_d T_{a_d}(sign_d y_{perm_d})
  //            = sum_a alpha_a * s(g,a) * T_b(y)  with  b[perm[d]] = a[d].
  const auto& ts = TruncatedSet::get(q);
  CoeffCompose cc;
  cc.src.resize(ts.triples.size());
  cc.sign.resize(ts.triples.size());
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    const auto& a = ts.triples[t];
    std::array<int, 3> b;
    double s = 1.0;
    for (int d = 0; d < 3; ++d) {
      b[g.perm[d]] = a[d];
      if (g.sign[d] < 0 && (a[d] & 1)) s = -s;
    }
    const int tb = ts.index(b[0], b[1], b[2]);
    cc.src[tb] = int(t);
    cc.sign[tb] = s;
  }
  return cc;
}

std::vector<int> point_permutation(const SignedPerm& g, std::span<const Vec3> pts, double tol) {
  std::vector<int> map(pts.size(), -1);
  for (size_t j = 0; j < pts.size(); ++j) {
    const Vec3 img = g(pts[j]);
    int found = -1;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (std::abs(pts[i][0] - img[0]) < tol && std::abs(pts[i][1] - img[1]) < tol &&
          std::abs(pts[i][2] - img[2]) < tol) {
        found = int(i);
        break;
      }
    }
    if (found < 0) throw std::runtime_error("point_permutation: point set not g-invariant");
    map[j] = found;
  }
  return map;
}

} // namespace arena
