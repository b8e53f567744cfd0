#ifndef ARENA_CHEBYSHEV_HPP
#define ARENA_CHEBYSHEV_HPP

#include <span>
#include <string>
#include <vector>

#include "arena/common.hpp"
#include "arena/morton.hpp"

namespace arena {

/// Number of coefficients in the truncated tensor set i+j+k < q.
inline int cheb_coeff_count(int q) { return q * (q + 1) * (q + 2) / 6; }

/// Flat ordering of the truncated index set, shared by every consumer of coefficient vectors.
struct TruncatedSet {
  int q = 0;
  std::vector<std::array<int, 3>> triples;      // flat index -> (i,j,k)
  std::vector<int> flat;                        // i*q*q + j*q + k -> flat index or -1
  int index(int i, int j, int k) const { return flat[(i * q + j) * q + k]; }
  static const TruncatedSet& get(int q);        // cached per order
};

/// Chebyshev-Gauss points cos(pi(2i+1)/2q), i = 0..q-1.
std::vector<double> cheb_gauss_nodes(int q);

/// T_0..T_{q-1} evaluated at x in [-1,1].
void cheb_t_values(int q, double x, double* out);

/// Truncated tensor Chebyshev representation of a scalar function on one octant.
struct ChebCoeffs {
  int q = 0;
  MortonKey octant;
  std::vector<double> coeffs;   // TruncatedSet::get(q) ordering

  double operator[](int idx) const { return coeffs[idx]; }
};

/// Interpolate f at the q^3 tensor Chebyshev-Gauss nodes of the octant, truncate to i+j+k < q.
ChebCoeffs cheb_approx(const ScalarField& f, const MortonKey& octant, int q);

/// Same, but from precomputed samples at the tensor nodes (index a*q*q + b*q + c for node (a,b,c)).
ChebCoeffs cheb_approx_from_samples(std::span<const double> samples, const MortonKey& octant, int q);

/// Truncated coefficients from q^3 tensor node values, local coordinates only.
void cheb_transform(int q, std::span<const double> values, std::span<double> coeffs);

double cheb_eval1(const ChebCoeffs& c, const Vec3& x);
std::vector<double> cheb_eval(const ChebCoeffs& c, std::span<const Vec3> points);

/// Evaluate in octant-local coordinates xi in [-1,1]^3 (no domain check).
double cheb_eval_local(int q, std::span<const double> coeffs, const Vec3& xi);

/// Sum of |alpha_ijk| over the top shell i+j+k = q-1.
double truncation_estimate(const ChebCoeffs& c);

/// Mean of the represented polynomial over the octant.
double cheb_mean(const ChebCoeffs& c);

/// "i j k alpha" lines.
std::string cheb_dump(const ChebCoeffs& c);

} // namespace arena

#endif
