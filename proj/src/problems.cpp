#include "arena/problems.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace arena {

TestCase TestCase::oscillatory(int k) {
  if (k < 1) throw std::invalid_argument("oscillatory: k >= 1 required");
  TestCase tc;
  tc.kind = Kind::kOscillatory;
  tc.k = k;
  return tc;
}

TestCase TestCase::layer(double alpha, double radius, const Vec3& center) {
  if (!(alpha > 2)) throw std::invalid_argument("layer: alpha > 2 required");
  if (!(radius > 0 && radius < 0.5)) throw std::invalid_argument("layer: 0 < R < 0.5 required");
  for (double c : center)
    if (c < 0 || c > 1) throw std::invalid_argument("layer: center inside unit cube required");
  TestCase tc;
  tc.kind = Kind::kLayer;
  tc.alpha = alpha;
  tc.radius = radius;
  tc.center = center;
  return tc;
}

TestCase TestCase::parse(const std::string& s) {
  auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("test case: expected key=value in " + s);
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  if (head == "osc") return oscillatory(kv.count("k") ? int(kv["k"]) : 1);
  if (head == "layer")
    return layer(kv.count("alpha") ? kv["alpha"] : 10.0, kv.count("r") ? kv["r"] : 0.25);
  throw std::invalid_argument("test case: unknown kind '" + head + "' (want osc or layer)");
}

std::string TestCase::str() const {
  std::ostringstream os;
  if (kind == Kind::kOscillatory)
    os << "osc:k=" << k;
  else
    os << "layer:alpha=" << alpha << ",r=" << radius;
  return os.str();
}

static void check_in_cube(const Vec3& x) {
  for (double c : x)
    if (c < -1e-12 || c > 1 + 1e-12) throw std::invalid_argument("point outside unit cube");
}

double exact_u(const TestCase& tc, const Vec3& x) {
  check_in_cube(x);
  if (tc.kind == TestCase::Kind::kOscillatory) {
    const double w = 2.0 * M_PI * tc.k;
    return std::sin(w * x[0]) * std::sin(w * x[1]) * std::sin(w * x[2]);
  }
  const double r = norm(x - tc.center);
  return std::exp(-std::pow(r / tc.radius, tc.alpha));
}

double exact_f(const TestCase& tc, const Vec3& x) {
  check_in_cube(x);
  if (tc.kind == TestCase::Kind::kOscillatory) {
    const double w = 2.0 * M_PI * tc.k;
    return 3.0 * w * w * exact_u(tc, x);
  }
  // u = exp(-s), s = (r/R)^a:  f = -Lap u = (a s / r^2)(a + 1 - a s) exp(-s),
  // with the removable limit f -> 0 as r -> 0 for a > 2.
  const double a = tc.alpha;
  const double r = norm(x - tc.center);
  if (r < 1e-30) return 0.0;
  const double s = std::pow(r / tc.radius, a);
  return a * s / (r * r) * (a + 1.0 - a * s) * std::exp(-s);
}

double linf_rel_error(const std::function<double(const Vec3&)>& u_num, const TestCase& tc,
                      std::span<const Vec3> samples, double* gauge_shift) {
  if (samples.empty()) throw std::invalid_argument("linf_rel_error: empty sample set");
  double num_mean = 0, ex_mean = 0, ex_max = 0;
  std::vector<double> un(samples.size()), ue(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    un[i] = u_num(samples[i]);
    ue[i] = exact_u(tc, samples[i]);
    num_mean += un[i];
    ex_mean += ue[i];
    ex_max = std::max(ex_max, std::abs(ue[i]));
  }
  if (ex_max == 0) throw std::invalid_argument("linf_rel_error: exact solution vanishes on samples");
  const double shift = (ex_mean - num_mean) / double(samples.size());
  if (gauge_shift) *gauge_shift = shift;
  double err = 0;
  for (size_t i = 0; i < samples.size(); ++i) err = std::max(err, std::abs(un[i] + shift - ue[i]));
  return err / ex_max;
}

static double radical_inverse(int base, int i) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

std::vector<Vec3> halton_points(int n, int skip) {
  std::vector<Vec3> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = {radical_inverse(2, i + skip), radical_inverse(3, i + skip), radical_inverse(5, i + skip)};
  return pts;
}

} // namespace arena
