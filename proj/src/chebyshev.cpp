#include "arena/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace arena {

const TruncatedSet& TruncatedSet::get(int q) {
  static std::mutex mu;
  static std::map<int, TruncatedSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  TruncatedSet s;
  s.q = q;
  s.flat.assign(size_t(q) * q * q, -1);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q - i; ++j)
      for (int k = 0; k < q - i - j; ++k) {
        s.flat[(i * q + j) * q + k] = int(s.triples.size());
        s.triples.push_back({i, j, k});
      }
  return cache.emplace(q, std::move(s)).first->second;
}

std::vector<double> cheb_gauss_nodes(int q) {
  std::vector<double> x(q);
  for (int i = 0; i < q; ++i) x[i] = std::cos(M_PI * (2 * i + 1) / (2.0 * q));
  return x;
}

void cheb_t_values(int q, double x, double* out) {
  out[0] = 1.0;
  if (q > 1) out[1] = x;
  for (int i = 2; i < q; ++i) out[i] = 2.0 * x * out[i - 1] - out[i - 2];
}

void cheb_transform(int q, std::span<const double> values, std::span<double> coeffs) {
  const int n3 = q * q * q;
  if (int(values.size()) != n3) throw std::invalid_argument("cheb_transform: bad sample count");
  const auto nodes = cheb_gauss_nodes(q);
  // 1D analysis matrix C[i][a] = (2 - delta_i0)/q * T_i(x_a); discrete orthogonality
  // at the Chebyshev-Gauss nodes makes this exact for polynomials of degree < q.
  std::vector<double> C(size_t(q) * q), tv(q);
  for (int a = 0; a < q; ++a) {
    cheb_t_values(q, nodes[a], tv.data());
    for (int i = 0; i < q; ++i) C[size_t(i) * q + a] = (i == 0 ? 1.0 : 2.0) / q * tv[i];
  }
  std::vector<double> work1(values.begin(), values.end()), work2(n3);
  // contract one axis at a time: (a,b,c) -> (i,b,c) -> (i,j,c) -> (i,j,k)
  for (int pass = 0; pass < 3; ++pass) {
    // treat work1 as [q][q*q]: transform the leading axis, rotate layout so that
    // after three passes the index order is restored.
    const int rest = q * q;
    for (int i = 0; i < q; ++i)
      for (int r = 0; r < rest; ++r) {
        double acc = 0;
        for (int a = 0; a < q; ++a) acc += C[size_t(i) * q + a] * work1[size_t(a) * rest + r];
        work2[size_t(r) * q + i] = acc;   // rotate: (i, r) stored as (r, i)
      }
    std::swap(work1, work2);
  }
  const auto& ts = TruncatedSet::get(q);
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    coeffs[t] = work1[(size_t(i) * q + j) * q + k];
  }
}

ChebCoeffs cheb_approx_from_samples(std::span<const double> samples, const MortonKey& octant, int q) {
  if (q < 2) throw std::invalid_argument("cheb_approx: q must be >= 2");
  for (double v : samples)
    if (!std::isfinite(v)) throw std::runtime_error("cheb_approx: non-finite sample");
  ChebCoeffs c;
  c.q = q;
  c.octant = octant;
  c.coeffs.resize(cheb_coeff_count(q));
  cheb_transform(q, samples, c.coeffs);
  return c;
}

ChebCoeffs cheb_approx(const ScalarField& f, const MortonKey& octant, int q) {
  if (q < 2) throw std::invalid_argument("cheb_approx: q must be >= 2");
  const auto nodes = cheb_gauss_nodes(q);
  const Vec3 lo = octant.lower();
  const double h = octant.side();
  std::vector<double> samples(size_t(q) * q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const Vec3 x{lo[0] + 0.5 * h * (nodes[a] + 1.0), lo[1] + 0.5 * h * (nodes[b] + 1.0),
                     lo[2] + 0.5 * h * (nodes[c] + 1.0)};
        samples[(size_t(a) * q + b) * q + c] = f(x);
      }
  return cheb_approx_from_samples(samples, octant, q);
}

double cheb_eval_local(int q, std::span<const double> coeffs, const Vec3& xi) {
  const auto& ts = TruncatedSet::get(q);
  std::vector<double> tx(q), ty(q), tz(q);
  cheb_t_values(q, xi[0], tx.data());
  cheb_t_values(q, xi[1], ty.data());
  cheb_t_values(q, xi[2], tz.data());
  double acc = 0;
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    acc += coeffs[t] * tx[i] * ty[j] * tz[k];
  }
  return acc;
}

double cheb_eval1(const ChebCoeffs& c, const Vec3& x) {
  const Vec3 lo = c.octant.lower();
  const double h = c.octant.side();
  Vec3 xi;
  for (int d = 0; d < 3; ++d) {
    xi[d] = 2.0 * (x[d] - lo[d]) / h - 1.0;
    if (xi[d] < -1.0 - 1e-12 || xi[d] > 1.0 + 1e-12)
      throw std::invalid_argument("cheb_eval: point outside octant");
  }
  return cheb_eval_local(c.q, c.coeffs, xi);
}

std::vector<double> cheb_eval(const ChebCoeffs& c, std::span<const Vec3> points) {
  std::vector<double> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = cheb_eval1(c, points[i]);
  return out;
}

double truncation_estimate(const ChebCoeffs& c) {
  const auto& ts = TruncatedSet::get(c.q);
  double s = 0;
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    if (i + j + k == c.q - 1) s += std::abs(c.coeffs[t]);
  }
  return s;
}

double cheb_mean(const ChebCoeffs& c) {
  // integral of T_i over [-1,1]: 0 for odd i, 2/(1-i^2) for even i
  std::vector<double> ti(c.q, 0.0);
  for (int i = 0; i < c.q; i += 2) ti[i] = 2.0 / (1.0 - double(i) * i);
  const auto& ts = TruncatedSet::get(c.q);
  double s = 0;
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    s += c.coeffs[t] * ti[i] * ti[j] * ti[k];
  }
  return s / 8.0;
}

std::string cheb_dump(const ChebCoeffs& c) {
  std::ostringstream os;
  os.precision(17);
  const auto& ts = TruncatedSet::get(c.q);
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    os << i << " " << j << " " << k << " " << c.coeffs[t] << "\n";
  }
  return os.str();
}

} // namespace arena
