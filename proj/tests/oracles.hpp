// Test-only independent reference implementations. These deliberately use different
// algorithms from the library code they check.
#ifndef ARENA_TEST_ORACLES_HPP
#define ARENA_TEST_ORACLES_HPP

#include <complex>
#include <functional>
#include <vector>

#include "arena/common.hpp"
#include "arena/grid.hpp"
#include "arena/morton.hpp"
#include "arena/octree.hpp"

namespace arena::oracle {

/// O(N^2) direct-summation DFT, same convention as dft3_forward.
std::vector<std::complex<double>> direct_dft3(const GridField& g);

/// Newton potential of f over the axis-aligned box [lo,hi] at x, via signed solid-angle
/// face decomposition with an exact (Gauss) radial integral and error-driven adaptive 2D
/// face quadrature. fdeg bounds the polynomial degree of f along any line.
double newton_potential(const std::function<double(const Vec3&)>& f, int fdeg, const Vec3& lo,
                        const Vec3& hi, const Vec3& x, double abs_tol);

/// Potential at x of one leaf's truncated Chebyshev source (physical coordinates).
double leaf_potential(const ChebCoeffs& c, const Vec3& x, double abs_tol);

/// Potential at x of a whole tree's piecewise source, optionally including the periodic
/// images with shift in {-1,0,1}^3 (image_range=1) around the unit cell.
double tree_potential(const Octree& t, const std::vector<ChebCoeffs>& data, const Vec3& x,
                      int image_range, double abs_tol);

/// Central-difference Laplacian.
double fd_laplacian(const std::function<double(const Vec3&)>& u, const Vec3& x, double h);

/// Exhaustive check that U/V/W/X plus the M2M/L2L closure cover every
/// (source leaf, image, target leaf) pair exactly once. Images run over {-1,0,1}^3 for
/// periodic trees, only the zero image otherwise. Returns a human-readable error or "".
std::string check_pair_coverage(const LinkedTree& lt, const Octree& t, const InteractionLists& il);

/// Geometric U-list of a leaf: all leaves (with image shifts) whose closed image box
/// touches the target's box, built by brute-force scan.
std::vector<std::pair<int, std::array<int8_t, 3>>> brute_force_ulist(const Octree& t, int leaf,
                                                                     bool periodic);

} // namespace arena::oracle

#endif
