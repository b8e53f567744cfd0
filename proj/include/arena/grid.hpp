#ifndef ARENA_GRID_HPP
#define ARENA_GRID_HPP

#include <string>
#include <vector>

#include "arena/common.hpp"

namespace arena {

/// Real samples of a periodic function at x = (i/n, j/n, k/n), row-major.
struct GridField {
  int n = 0;
  std::vector<double> data;

  GridField() = default;
  explicit GridField(int n_) : n(n_), data(size_t(n_) * n_ * n_, 0.0) {
    if (n_ < 2) throw std::invalid_argument("GridField: n >= 2 required");
  }

  double& at(int i, int j, int k) { return data[(size_t(i) * n + j) * n + k]; }
  double at(int i, int j, int k) const { return data[(size_t(i) * n + j) * n + k]; }
  size_t size() const { return data.size(); }

  double mean() const;
  double max_abs() const;
};

GridField sample_grid(const ScalarField& f, int n);

/// Binary dump: magic, n, then row-major doubles.
void grid_write(const GridField& g, const std::string& path);
GridField grid_read(const std::string& path);

/// "x,y,z,value" rows subsampled by stride, for plotting.
void grid_write_csv(const GridField& g, const std::string& path, int stride = 1);

} // namespace arena

#endif
