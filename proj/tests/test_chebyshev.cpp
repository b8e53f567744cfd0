#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "arena/chebyshev.hpp"

using namespace arena;

namespace {

// random polynomial of total degree < q in octant-local coordinates
struct RandomPoly {
  int q;
  std::vector<double> coef;
  RandomPoly(int q_, uint64_t seed) : q(q_) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    coef.resize(cheb_coeff_count(q));
    for (double& c : coef) c = u(rng);
  }
  double operator()(const Vec3& xi) const { return cheb_eval_local(q, coef, xi); }
};

Vec3 to_local(const MortonKey& oct, const Vec3& x) {
  const Vec3 lo = oct.lower();
  const double h = oct.side();
  return {2 * (x[0] - lo[0]) / h - 1, 2 * (x[1] - lo[1]) / h - 1, 2 * (x[2] - lo[2]) / h - 1};
}

} // namespace

TEST_CASE("constant field: alpha_000 only") {
  auto c = cheb_approx([](const Vec3&) { return 5.0; }, MortonKey{}, 6);
  const auto& ts = TruncatedSet::get(6);
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    if (i == 0 && j == 0 && k == 0)
      CHECK(c.coeffs[t] == doctest::Approx(5.0).epsilon(1e-14));
    else
      CHECK(std::abs(c.coeffs[t]) <= 1e-14);
  }
}

TEST_CASE("linear local coordinate is T_1") {
  const MortonKey oct = morton_encode(1, {1, 0, 1});
  auto c = cheb_approx([&](const Vec3& x) { return to_local(oct, x)[0]; }, oct, 5);
  const auto& ts = TruncatedSet::get(5);
  for (size_t t = 0; t < ts.triples.size(); ++t) {
    auto [i, j, k] = ts.triples[t];
    const double want = (i == 1 && j == 0 && k == 0) ? 1.0 : 0.0;
    CHECK(std::abs(c.coeffs[t] - want) <= 1e-13);
  }
}

TEST_CASE("exp field: estimator predicts the realized error within 10x") {
  auto f = [](const Vec3& y) { return std::exp(y[0] + y[1] + y[2]); };
  auto c = cheb_approx(f, MortonKey{}, 8);
  const double est = truncation_estimate(c);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  double maxerr = 0;
  for (int i = 0; i < 100; ++i) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    maxerr = std::max(maxerr, std::abs(f(x) - cheb_eval1(c, x)));
  }
  CHECK(maxerr <= 10.0 * est);
  CHECK(est > 0);
}

TEST_CASE("eval of a pure constant coefficient") {
  ChebCoeffs c;
  c.q = 4;
  c.octant = MortonKey{};
  c.coeffs.assign(cheb_coeff_count(4), 0.0);
  c.coeffs[TruncatedSet::get(4).index(0, 0, 0)] = 3.25;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 20; ++i) CHECK(cheb_eval1(c, {u(rng), u(rng), u(rng)}) == doctest::Approx(3.25));
}

TEST_CASE("alpha_110 at the octant center vanishes") {
  ChebCoeffs c;
  c.q = 4;
  c.octant = MortonKey{};
  c.coeffs.assign(cheb_coeff_count(4), 0.0);
  c.coeffs[TruncatedSet::get(4).index(1, 1, 0)] = 1.0;
  CHECK(std::abs(cheb_eval1(c, {0.5, 0.5, 0.5})) <= 1e-15);
}

TEST_CASE("approx/eval round trip on random total-degree polynomials") {
  for (int q : {4, 8, 12}) {
    const RandomPoly p(q, 100 + q);
    const MortonKey oct = morton_encode(2, {1, 2, 3});
    auto c = cheb_approx([&](const Vec3& x) { return p(to_local(oct, x)); }, oct, q);
    std::mt19937_64 rng(q);
    std::uniform_real_distribution<double> u(0, 1);
    const Vec3 lo = oct.lower();
    double scale = 0;
    for (double v : p.coef) scale += std::abs(v);
    for (int i = 0; i < 50; ++i) {
      const Vec3 x{lo[0] + 0.25 * u(rng), lo[1] + 0.25 * u(rng), lo[2] + 0.25 * u(rng)};
      CHECK(std::abs(cheb_eval1(c, x) - p(to_local(oct, x))) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("point outside the octant rejected") {
  auto c = cheb_approx([](const Vec3&) { return 1.0; }, morton_encode(1, {0, 0, 0}), 4);
  CHECK_THROWS_AS((void)cheb_eval1(c, {0.9, 0.1, 0.1}), std::invalid_argument);
}

TEST_CASE("truncation estimate: constant and pure top-shell") {
  auto c = cheb_approx([](const Vec3&) { return 2.0; }, MortonKey{}, 6);
  CHECK(truncation_estimate(c) <= 1e-14);

  ChebCoeffs top;
  top.q = 6;
  top.octant = MortonKey{};
  top.coeffs.assign(cheb_coeff_count(6), 0.0);
  top.coeffs[TruncatedSet::get(6).index(2, 2, 1)] = -0.3;   // i+j+k = 5 = q-1
  CHECK(truncation_estimate(top) == doctest::Approx(0.3));
}

TEST_CASE("estimate shrinks on a halved octant (spectral decay)") {
  auto g = [](const Vec3& x) {
    const Vec3 d{x[0] - 0.4, x[1] - 0.6, x[2] - 0.3};
    return std::exp(-8.0 * dot(d, d));
  };
  const double parent = truncation_estimate(cheb_approx(g, MortonKey{}, 8));
  const double child = truncation_estimate(cheb_approx(g, morton_encode(1, {0, 0, 0}), 8));
  CHECK(child < parent);
}

TEST_CASE("estimate decreases with q for sin(2 pi y1)") {
  auto f = [](const Vec3& x) { return std::sin(2 * M_PI * x[0]); };
  std::vector<double> est;
  for (int q = 4; q <= 16; q += 2) est.push_back(truncation_estimate(cheb_approx(f, MortonKey{}, q)));
  for (size_t i = 1; i < est.size(); ++i) CHECK(est[i] <= 2.0 * est[i - 1]);
  CHECK(est.back() < 1e-6 * est.front());
}

TEST_CASE("eval is linear in the coefficients") {
  const int q = 6;
  RandomPoly p1(q, 11), p2(q, 12);
  ChebCoeffs c1, c2, mix;
  c1.q = c2.q = mix.q = q;
  c1.octant = c2.octant = mix.octant = MortonKey{};
  c1.coeffs = p1.coef;
  c2.coeffs = p2.coef;
  mix.coeffs.resize(p1.coef.size());
  const double a = 1.7, b = -0.4;
  for (size_t i = 0; i < mix.coeffs.size(); ++i) mix.coeffs[i] = a * p1.coef[i] + b * p2.coef[i];
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 30; ++i) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    CHECK(cheb_eval1(mix, x) ==
          doctest::Approx(a * cheb_eval1(c1, x) + b * cheb_eval1(c2, x)).epsilon(1e-12));
  }
}

TEST_CASE("estimator bounds the realized error within 100x on analytic fields") {
  std::vector<ScalarField> fields = {
      [](const Vec3& x) { return std::sin(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]); },
      [](const Vec3& x) { return std::exp(2.0 * x[0] * x[1] - x[2]); },
      [](const Vec3& x) { return 1.0 / (1.0 + 4.0 * dot(x, x)); },
  };
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& f : fields) {
    for (int q : {6, 10}) {
      auto c = cheb_approx(f, MortonKey{}, q);
      double maxerr = 0;
      for (int i = 0; i < 200; ++i) {
        const Vec3 x{u(rng), u(rng), u(rng)};
        maxerr = std::max(maxerr, std::abs(f(x) - cheb_eval1(c, x)));
      }
      CHECK(maxerr <= 100.0 * truncation_estimate(c) + 1e-15);
    }
  }
}

TEST_CASE("coefficient dump format") {
  const MortonKey oct{};
  auto c = cheb_approx([&](const Vec3& x) { return 2 * x[0] - 1; }, oct, 3);   // local T_1
  std::istringstream is(cheb_dump(c));
  int i, j, k;
  double a;
  bool saw_100 = false;
  int lines = 0;
  while (is >> i >> j >> k >> a) {
    ++lines;
    if (i == 1 && j == 0 && k == 0) {
      saw_100 = true;
      CHECK(a == doctest::Approx(1.0));
    }
  }
  CHECK(lines == cheb_coeff_count(3));
  CHECK(saw_100);
}

TEST_CASE("non-finite samples rejected") {
  CHECK_THROWS_AS(
      (void)cheb_approx([](const Vec3& x) { return 1.0 / (x[0] - x[0]); }, MortonKey{}, 4),
      std::runtime_error);
}
