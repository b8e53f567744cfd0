#include "arena/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "arena/chebyshev.hpp"
#include "arena/nodes1d.hpp"

namespace arena {

const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

namespace {

constexpr int kMaxOrder = 40;

struct Cell {
  Vec3 lo, hi;
  double side() const { return hi[0] - lo[0]; }
};

double dist_to_cell(const Vec3& x, const Cell& c) {
  double d2 = 0;
  for (int d = 0; d < 3; ++d) {
    const double t = std::max({c.lo[d] - x[d], 0.0, x[d] - c.hi[d]});
    d2 += t * t;
  }
  return std::sqrt(d2);
}

bool in_closure(const Vec3& x, const Cell& c) {
  for (int d = 0; d < 3; ++d)
    if (x[d] < c.lo[d] || x[d] > c.hi[d]) return false;
  return true;
}

struct Workspace {
  int q = 0, ncoef = 0;
  std::vector<double> A, B, C;        // kernel tensor and contraction stages
  std::vector<double> tv;             // axis T values, 3 * q * kMaxOrder
  std::vector<double> yw;             // axis nodes/weights, 6 * kMaxOrder
  std::vector<double> tpt;            // per-point T values for pyramid rules

  explicit Workspace(int q_) : q(q_), ncoef(cheb_coeff_count(q_)) {
    A.resize(size_t(kMaxOrder) * kMaxOrder * kMaxOrder);
    B.resize(size_t(q) * kMaxOrder * kMaxOrder);
    C.resize(size_t(q) * q * kMaxOrder);
    tv.resize(size_t(3) * q * kMaxOrder);
    yw.resize(size_t(6) * kMaxOrder);
    tpt.resize(size_t(3) * q);
  }
};

int gauss_order(const QuadSpec& s, double delta) {
  int n = s.q / 2 + 3;
  if (delta < 1.0)
    n = s.q / 2 + 9;
  else if (delta < 2.0)
    n = s.q / 2 + 6;
  else if (delta < 4.0)
    n = s.q / 2 + 4;
  return std::min(n + s.n_extra, kMaxOrder);
}

/// Tensor Gauss on a cell with sum-factorized accumulation of all basis functions.
void gauss_cell(const QuadSpec& spec, Workspace& ws, const Vec3& x, const Cell& cell, int n, double* row) {
  const auto& [gx, gw] = gl_rule(n);
  const int q = ws.q;
  double* ynode = ws.yw.data();
  double* wnode = ws.yw.data() + 3 * kMaxOrder;
  for (int d = 0; d < 3; ++d) {
    const double c = 0.5 * (cell.lo[d] + cell.hi[d]), r = 0.5 * (cell.hi[d] - cell.lo[d]);
    for (int a = 0; a < n; ++a) {
      ynode[d * kMaxOrder + a] = c + r * gx[a];
      wnode[d * kMaxOrder + a] = r * gw[a];
    }
    // T values stored as tv[d][i][a]
    double* tcol = ws.tpt.data();
    for (int a = 0; a < n; ++a) {
      cheb_t_values(q, ynode[d * kMaxOrder + a], tcol);
      for (int i = 0; i < q; ++i) ws.tv[(size_t(d) * q + i) * kMaxOrder + a] = tcol[i];
    }
  }
  // kernel tensor
  for (int a = 0; a < n; ++a) {
    const double dx = x[0] - ynode[0 * kMaxOrder + a];
    const double wa = wnode[0 * kMaxOrder + a];
    for (int b = 0; b < n; ++b) {
      const double dy = x[1] - ynode[1 * kMaxOrder + b];
      const double wab = wa * wnode[1 * kMaxOrder + b];
      const double dxy2 = dx * dx + dy * dy;
      double* arow = &ws.A[(size_t(a) * n + b) * n];
      for (int c = 0; c < n; ++c) {
        const double dz = x[2] - ynode[2 * kMaxOrder + c];
        arow[c] = wab * wnode[2 * kMaxOrder + c] / (4.0 * M_PI * std::sqrt(dxy2 + dz * dz));
      }
    }
  }
  // stage 1: B[i][b][c] = sum_a T0[i][a] A[a][b][c]
  const int n2 = n * n;
  for (int i = 0; i < q; ++i) {
    double* brow = &ws.B[size_t(i) * n2];
    std::fill(brow, brow + n2, 0.0);
    const double* t0 = &ws.tv[(size_t(0) * q + i) * kMaxOrder];
    for (int a = 0; a < n; ++a) {
      const double t = t0[a];
      const double* arow = &ws.A[size_t(a) * n2];
      for (int bc = 0; bc < n2; ++bc) brow[bc] += t * arow[bc];
    }
  }
  // stage 2: C[i][j][c] = sum_b T1[j][b] B[i][b][c], only i+j < q
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q - i; ++j) {
      double* crow = &ws.C[(size_t(i) * q + j) * kMaxOrder];
      std::fill(crow, crow + n, 0.0);
      const double* t1 = &ws.tv[(size_t(1) * q + j) * kMaxOrder];
      for (int b = 0; b < n; ++b) {
        const double t = t1[b];
        const double* brow = &ws.B[(size_t(i) * n + b) * n];
        for (int c = 0; c < n; ++c) crow[c] += t * brow[c];
      }
    }
  // stage 3: accumulate into the truncated set
  const auto& ts = TruncatedSet::get(q);
  for (size_t idx = 0; idx < ts.triples.size(); ++idx) {
    auto [i, j, k] = ts.triples[idx];
    const double* crow = &ws.C[(size_t(i) * q + j) * kMaxOrder];
    const double* t2 = &ws.tv[(size_t(2) * q + k) * kMaxOrder];
    double acc = 0;
    for (int c = 0; c < n; ++c) acc += t2[c] * crow[c];
    row[idx] += acc;
  }
}

/// One pyramid slice of the Duffy rule: apex x, base = the 2D face patch at coordinate
/// plane axis w = fw, patch [u0,u1] x [v0,v1] in the other two axes.
void pyramid_patch(const QuadSpec& spec, Workspace& ws, const Vec3& x, int w, double fw, int ua, int va,
                   double u0, double u1, double v0, double v1, double* row) {
  const int q = ws.q;
  const double h = fw - x[w];
  if (h == 0.0) return;
  const int nt = std::min(q / 2 + 3 + spec.n_extra, kMaxOrder);
  const double ext = std::max(u1 - u0, v1 - v0);
  const int nf = std::min(std::max(4, int(q * ext / 4.0) + 4) + spec.n_extra, kMaxOrder);
  const auto& [tx, tw] = gl_rule(nt);
  const auto& [fx, fw8] = gl_rule(nf);
  const auto& ts = TruncatedSet::get(q);
  double* tvals = ws.tpt.data();
  for (int iu = 0; iu < nf; ++iu) {
    const double u = 0.5 * (u0 + u1) + 0.5 * (u1 - u0) * fx[iu];
    const double wu = 0.5 * (u1 - u0) * fw8[iu];
    for (int iv = 0; iv < nf; ++iv) {
      const double v = 0.5 * (v0 + v1) + 0.5 * (v1 - v0) * fx[iv];
      const double wv = 0.5 * (v1 - v0) * fw8[iv];
      Vec3 P;
      P[w] = fw;
      P[ua] = u;
      P[va] = v;
      const Vec3 dir = P - x;
      const double pr = norm(dir);
      const double base = std::abs(h) * wu * wv / (4.0 * M_PI * pr);
      const double sgn = h > 0 ? 1.0 : -1.0;   // signed pyramid (exterior apex)
      for (int it = 0; it < nt; ++it) {
        const double t = 0.5 * (1.0 + tx[it]);
        const double wt = 0.5 * tw[it];
        const Vec3 y = x + t * dir;
        cheb_t_values(q, y[0], tvals);
        cheb_t_values(q, y[1], tvals + q);
        cheb_t_values(q, y[2], tvals + 2 * q);
        const double wk = sgn * base * wt * t;
        for (size_t idx = 0; idx < ts.triples.size(); ++idx) {
          auto [i, j, k] = ts.triples[idx];
          row[idx] += wk * tvals[i] * tvals[q + j] * tvals[2 * q + k];
        }
      }
    }
  }
}

/// 2D grading of one pyramid face toward the apex projection.
void duffy_face(const QuadSpec& spec, Workspace& ws, const Vec3& x, int w, double fw, int ua, int va,
                double u0, double u1, double v0, double v1, int level, double* row) {
  const double h = std::abs(fw - x[w]);
  const double size = std::max(u1 - u0, v1 - v0);
  const double du = std::max({u0 - x[ua], 0.0, x[ua] - u1});
  const double dv = std::max({v0 - x[va], 0.0, x[va] - v1});
  const double d2 = std::hypot(du, dv);
  if (level < spec.max_level && size > 1.05 * h && d2 < spec.theta2 * size) {
    const double um = 0.5 * (u0 + u1), vm = 0.5 * (v0 + v1);
    duffy_face(spec, ws, x, w, fw, ua, va, u0, um, v0, vm, level + 1, row);
    duffy_face(spec, ws, x, w, fw, ua, va, um, u1, v0, vm, level + 1, row);
    duffy_face(spec, ws, x, w, fw, ua, va, u0, um, vm, v1, level + 1, row);
    duffy_face(spec, ws, x, w, fw, ua, va, um, u1, vm, v1, level + 1, row);
    return;
  }
  pyramid_patch(spec, ws, x, w, fw, ua, va, u0, u1, v0, v1, row);
}

/// Pyramid (Duffy) rule on a cell whose closure contains x.
void duffy_cell(const QuadSpec& spec, Workspace& ws, const Vec3& x, const Cell& cell, double* row) {
  static const int axes[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int w = 0; w < 3; ++w) {
    const int ua = axes[w][0], va = axes[w][1];
    for (double fw : {cell.lo[w], cell.hi[w]}) {
      if (fw == x[w]) continue;
      duffy_face(spec, ws, x, w, fw, ua, va, cell.lo[ua], cell.hi[ua], cell.lo[va], cell.hi[va], 0, row);
    }
  }
}

void integrate_cell(const QuadSpec& spec, Workspace& ws, const Vec3& x, const Cell& cell, int level,
                    double* row) {
  const double side = cell.side();
  const double d = dist_to_cell(x, cell);
  if (in_closure(x, cell)) {
    if (side > spec.min_side && level < spec.max_level) {
      // grade toward the singularity
    } else {
      duffy_cell(spec, ws, x, cell, row);
      return;
    }
  } else if (d >= spec.theta * side || level >= spec.max_level) {
    gauss_cell(spec, ws, x, cell, gauss_order(spec, d / side), row);
    return;
  }
  // split into octants
  const Vec3 mid{0.5 * (cell.lo[0] + cell.hi[0]), 0.5 * (cell.lo[1] + cell.hi[1]),
                 0.5 * (cell.lo[2] + cell.hi[2])};
  for (int c = 0; c < 8; ++c) {
    Cell sub;
    for (int dax = 0; dax < 3; ++dax) {
      const bool hi = (c >> dax) & 1;
      sub.lo[dax] = hi ? mid[dax] : cell.lo[dax];
      sub.hi[dax] = hi ? cell.hi[dax] : mid[dax];
    }
    integrate_cell(spec, ws, x, sub, level + 1, row);
  }
}

} // namespace

void newton_potential_box(const QuadSpec& spec, std::span<const Vec3> targets, double* out) {
  const int nc = cheb_coeff_count(spec.q);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < int(targets.size()); ++t) {
    Workspace ws(spec.q);
    double* row = out + size_t(t) * nc;
    std::fill(row, row + nc, 0.0);
    integrate_cell(spec, ws, targets[t], Cell{{-1, -1, -1}, {1, 1, 1}}, 0, row);
  }
}

std::vector<double> newton_potential_apply(const QuadSpec& spec, std::span<const double> coeffs,
                                           std::span<const Vec3> targets) {
  const int nc = cheb_coeff_count(spec.q);
  if (int(coeffs.size()) != nc) throw std::invalid_argument("newton_potential_apply: coeff size");
  std::vector<double> table(targets.size() * nc);
  newton_potential_box(spec, targets, table.data());
  std::vector<double> vals(targets.size());
  for (size_t t = 0; t < targets.size(); ++t) {
    double acc = 0;
    for (int a = 0; a < nc; ++a) acc += table[t * nc + a] * coeffs[a];
    vals[t] = acc;
  }
  return vals;
}

} // namespace arena
