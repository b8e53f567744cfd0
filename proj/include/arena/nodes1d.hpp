#ifndef ARENA_NODES1D_HPP
#define ARENA_NODES1D_HPP

#include <utility>
#include <vector>

namespace arena {

/// n-point Gauss-Legendre rule on [-1,1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Legendre-Gauss-Lobatto nodes for order p (p+1 nodes including the endpoints), ascending.
std::vector<double> lgl_nodes(int p);

/// P_n(x) and P_n'(x).
std::pair<double, double> legendre(int n, double x);

} // namespace arena

#endif
