#include "arena/grid.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

namespace arena {

double GridField::mean() const {
  double s = 0;
  for (double v : data) s += v;
  return s / double(data.size());
}

double GridField::max_abs() const {
  double m = 0;
  for (double v : data) m = std::max(m, std::abs(v));
  return m;
}

GridField sample_grid(const ScalarField& f, int n) {
  GridField g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g.at(i, j, k) = f(Vec3{double(i) / n, double(j) / n, double(k) / n});
  return g;
}

static const char kMagic[8] = {'A', 'R', 'N', 'A', 'G', 'F', '0', '1'};

void grid_write(const GridField& g, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("grid_write: cannot open " + path);
  os.write(kMagic, 8);
  const int64_t n = g.n;
  os.write(reinterpret_cast<const char*>(&n), sizeof n);
  os.write(reinterpret_cast<const char*>(g.data.data()), std::streamsize(g.data.size() * sizeof(double)));
}

GridField grid_read(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("grid_read: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("grid_read: bad magic in " + path);
  int64_t n = 0;
  is.read(reinterpret_cast<char*>(&n), sizeof n);
  GridField g{int(n)};
  is.read(reinterpret_cast<char*>(g.data.data()), std::streamsize(g.data.size() * sizeof(double)));
  if (!is) throw std::runtime_error("grid_read: truncated file " + path);
  return g;
}

void grid_write_csv(const GridField& g, const std::string& path, int stride) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("grid_write_csv: cannot open " + path);
  os.precision(17);
  os << "x,y,z,value\n";
  for (int i = 0; i < g.n; i += stride)
    for (int j = 0; j < g.n; j += stride)
      for (int k = 0; k < g.n; k += stride)
        os << double(i) / g.n << "," << double(j) / g.n << "," << double(k) / g.n << "," << g.at(i, j, k)
           << "\n";
}

} // namespace arena
