#include "fejer/estimators.hpp"

#include "fejer/angles.hpp"
#include "fejer/kernelmath.hpp"
#include "fejer/rng.hpp"
#include "fejer/simdist.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using fejer::AngleSample;
using fejer::FejerOrder;
using fejer::kPi;

namespace {

std::vector<double> draws(const fejer::CircularModel& model, std::size_t n, std::uint64_t seed)
{
  fejer::RngStream rng(seed, 0);
  return model.draw(n, rng);
}

} // namespace

TEST_CASE("sample construction validates and wraps")
{
  CHECK_THROWS_AS(AngleSample(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(AngleSample(std::vector<double>{ 0.0, 1.0 }, std::vector<double>{ 1.0 }), std::invalid_argument);
  CHECK_THROWS_AS(AngleSample(std::vector<double>{ NAN }), std::invalid_argument);
  CHECK_THROWS_AS(AngleSample(std::vector<double>{ 0.0 }, std::vector<double>{ -1.0 }), std::invalid_argument);
  CHECK_THROWS_AS(AngleSample(std::vector<double>{ 0.0, 1.0 }, std::vector<double>{ 0.0, 0.0 }), std::invalid_argument);

  const AngleSample s(std::vector<double>{ kPi, 3.0 * kPi / 2.0, -7.0, 0.5 });
  for (double a : s.angles()) {
    CHECK(a >= -kPi);
    CHECK(a < kPi);
  }
  CHECK(s.angles()[0] == -kPi);
  CHECK(s.angles()[1] == doctest::Approx(-kPi / 2.0));
  CHECK(s.total_weight() == 4.0);
  CHECK(s.unweighted());
}

TEST_CASE("trigonometric moments of simple samples")
{
  const auto t = fejer::trig_moments(AngleSample(std::vector<double>{ 0.0 }), 3);
  CHECK(t.a == std::vector<double>{ 1.0, 1.0, 1.0 });
  CHECK(t.b == std::vector<double>{ 0.0, 0.0, 0.0 });

  const auto u = fejer::trig_moments(AngleSample(std::vector<double>{ kPi / 2.0, -kPi / 2.0 }), 1);
  CHECK(std::abs(u.a[0]) < 1e-15);
  CHECK(std::abs(u.b[0]) < 1e-15);

  CHECK_THROWS_AS(fejer::trig_moments(AngleSample(std::vector<double>{ 0.0 }), 0), std::invalid_argument);
  CHECK_THROWS_AS(fejer::trig_moments(AngleSample(std::vector<double>{ 0.0, 1.0 }, std::vector<double>{ 1.0, 2.0 }), 2, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(fejer::trig_moments(AngleSample(std::vector<double>{ 0.3 }), 2, true), fejer::DegenerateSample);
}

TEST_CASE("trigonometric moments match direct sums and are bounded")
{
  const auto x = draws(fejer::CircularModel::von_mises(0.4, 1.5), 137, 11);
  const AngleSample s(x);
  const auto t = fejer::trig_moments(s, 40);
  for (int k = 1; k <= 40; ++k) {
    double c = 0.0;
    double sn = 0.0;
    for (double v : x) {
      c += std::cos(k * v);
      sn += std::sin(k * v);
    }
    CHECK(std::abs(t.a[k - 1] - c / x.size()) < 1e-13);
    CHECK(std::abs(t.b[k - 1] - sn / x.size()) < 1e-13);
    CHECK(std::abs(t.a[k - 1]) <= 1.0);
    CHECK(std::abs(t.b[k - 1]) <= 1.0);
    CHECK(t.a[k - 1] * t.a[k - 1] + t.b[k - 1] * t.b[k - 1] <= 1.0 + 1e-12);
  }
}

TEST_CASE("unbiased squared moments equal the pairwise double sum")
{
  const auto x = draws(fejer::CircularModel::uniform(), 20, 5);
  const AngleSample s(x);
  const auto t = fejer::trig_moments(s, 4, true);
  REQUIRE(t.c.has_value());
  const double n = 20.0;
  for (int k = 1; k <= 4; ++k) {
    double pair = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        pair += std::cos(k * (x[i] - x[j]));
    CHECK(std::abs((*t.c)[k - 1] - 2.0 * pair / (n * (n - 1.0))) < 1e-12);
  }
}

TEST_CASE("density of a single point is the kernel")
{
  const AngleSample s(std::vector<double>{ 0.0 });
  const std::vector<double> grid{ 0.0 };
  const auto g = fejer::density_estimate(s, FejerOrder(10), grid);
  CHECK(g.values[0] == doctest::Approx(11.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(g.kind == fejer::EstimateKind::Density);
  CHECK(g.m == FejerOrder(10));
  CHECK_THROWS_AS(fejer::density_estimate(s, FejerOrder(3), std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("Fourier form equals the kernel sum")
{
  const auto wc = draws(fejer::CircularModel::wrapped_cauchy(kPi / 2.0, std::exp(-1.0)), 50, 3);
  const auto grid = fejer::uniform_grid(256);
  const AngleSample s(wc);
  const auto f = fejer::density_estimate(s, FejerOrder(7), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double direct = 0.0;
    for (double x : wc)
      direct += oracle::fejer_series(7, grid[i] - x);
    CHECK(std::abs(f.values[i] - direct / wc.size()) < 1e-10);
  }

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    fejer::RngStream rng(seed, 9);
    const std::size_t n = 5 + static_cast<std::size_t>(rng.uniform() * 195);
    const int m = 1 + static_cast<int>(rng.uniform() * 64);
    const AngleSample r(draws(fejer::CircularModel::von_mises(1.0, 0.8), n, seed));
    const auto a = fejer::density_estimate(r, FejerOrder(m), grid);
    const auto b = fejer::density_estimate_kernel_sum(r, FejerOrder(m), grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      CHECK(std::abs(a.values[i] - b.values[i]) < 1e-10);
  }
}

TEST_CASE("density integrates to one and is nonnegative")
{
  const auto grid = fejer::uniform_grid(512);
  for (int m : { 1, 4, 25 }) {
    const AngleSample s(draws(fejer::CircularModel::wrapped_normal(0.0, 0.9), 40, m));
    const auto g = fejer::density_estimate(s, FejerOrder(m), grid);
    CHECK(std::abs(oracle::trapezoid_periodic(g.values) - 1.0) < 1e-6);
    CHECK(*std::min_element(g.values.begin(), g.values.end()) >= 0.0);
  }
}

TEST_CASE("density is periodic and rotation equivariant")
{
  const auto x = draws(fejer::CircularModel::von_mises(-1.0, 3.0), 60, 21);
  const AngleSample s(x);
  const auto grid = fejer::uniform_grid(64);
  std::vector<double> shifted(grid);
  for (double& t : shifted)
    t += 2.0 * kPi;
  const auto a = fejer::density_estimate(s, FejerOrder(9), grid);
  const auto b = fejer::density_estimate(s, FejerOrder(9), shifted);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);

  const double delta = 0.83;
  std::vector<double> grid_rot(grid);
  for (double& t : grid_rot)
    t += delta;
  const auto c = fejer::density_estimate(s.rotated(delta), FejerOrder(9), grid_rot);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(a.values[i] - c.values[i]) < 1e-12);
}

TEST_CASE("a weight of two equals a repeated point")
{
  const AngleSample twice(std::vector<double>{ 0.3, 0.3, -2.0 });
  const AngleSample weighted(std::vector<double>{ 0.3, -2.0 }, std::vector<double>{ 2.0, 1.0 });
  const auto grid = fejer::uniform_grid(128);
  const auto a = fejer::density_estimate(twice, FejerOrder(6), grid);
  const auto b = fejer::density_estimate(weighted, FejerOrder(6), grid);
  const auto ca = fejer::cdf_estimate(twice, FejerOrder(6), -kPi, grid);
  const auto cb = fejer::cdf_estimate(weighted, FejerOrder(6), -kPi, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(a.values[i] - b.values[i]) < 1e-13);
    CHECK(std::abs(ca.values[i] - cb.values[i]) < 1e-13);
  }
}

TEST_CASE("CDF of a single point")
{
  const AngleSample s(std::vector<double>{ 0.0 });
  const std::vector<double> grid{ 0.0, kPi, -kPi };
  const auto g = fejer::cdf_estimate(s, FejerOrder(10), -kPi, grid);
  CHECK(g.values[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(g.values[1] == 1.0);
  CHECK(g.values[2] == 0.0);
  CHECK(g.kind == fejer::EstimateKind::Cdf);
  CHECK(g.origin == -kPi);
}

TEST_CASE("CDF at origin and after a full turn")
{
  const AngleSample s(std::vector<double>{ -kPi / 2.0, kPi / 2.0 });
  const auto g = fejer::cdf_estimate(s, FejerOrder(3), -kPi, std::vector<double>{ kPi });
  CHECK(g.values[0] == 1.0);

  const AngleSample r(draws(fejer::CircularModel::von_mises(0.0, 2.0), 30, 4));
  for (double origin : { -kPi, -1.0, 0.0, 2.5 }) {
    const auto a = fejer::cdf_estimate(r, FejerOrder(8), origin, std::vector<double>{ origin, origin + 2.0 * kPi });
    CHECK(a.values[0] == 0.0);
    CHECK(a.values[1] == 1.0);
  }
}

TEST_CASE("CDF equals the integrated density estimate")
{
  const AngleSample s(draws(fejer::CircularModel::von_mises(0.0, 2.0), 100, 8));
  const FejerOrder m(14);
  const auto grid = fejer::uniform_grid(64);
  const auto g = fejer::cdf_estimate(s, m, -kPi, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double integral = oracle::adaptive_simpson(
      [&](double t) { return fejer::density_estimate(s, m, std::vector<double>{ t }).values[0]; }, -kPi, grid[i], 1e-10);
    CHECK(std::abs(g.values[i] - integral) < 1e-6);
  }
}

TEST_CASE("CDF is monotone along the arc and bounded")
{
  const AngleSample s(draws(fejer::CircularModel::mixture(fejer::CircularModel::von_mises(0.0, 5.0),
                                                         fejer::CircularModel::von_mises(2.0, 1.0), 0.4),
                            80, 13));
  for (double origin : { -kPi, -0.7, 1.9 }) {
    std::vector<double> arc(2001);
    for (std::size_t i = 0; i < arc.size(); ++i)
      arc[i] = origin + 2.0 * kPi * i / 2000.0;
    const auto g = fejer::cdf_estimate(s, FejerOrder(12), origin, arc);
    for (std::size_t i = 0; i < arc.size(); ++i) {
      CHECK(g.values[i] >= 0.0);
      CHECK(g.values[i] <= 1.0);
      if (i > 0)
        CHECK(g.values[i] >= g.values[i - 1] - 1e-14);
    }
    CHECK(g.values.front() == 0.0);
    CHECK(g.values.back() == 1.0);
  }
}

TEST_CASE("CDF derivative recovers the density")
{
  const AngleSample s(draws(fejer::CircularModel::von_mises(0.5, 1.0), 70, 31));
  const FejerOrder m(9);
  const double h = 1e-4;
  for (double t = -2.5; t < 2.5; t += 0.37) {
    const auto c = fejer::cdf_estimate(s, m, -kPi, std::vector<double>{ t - h, t + h });
    const double d = (c.values[1] - c.values[0]) / (2.0 * h);
    const double f = fejer::density_estimate(s, m, std::vector<double>{ t }).values[0];
    CHECK(std::abs(d - f) < 1e-6);
  }
}

TEST_CASE("sup-norm error shrinks with n")
{
  const auto truth = fejer::CircularModel::von_mises(0.0, 2.0);
  const auto grid = fejer::uniform_grid(256);
  double prev = 1e9;
  for (std::size_t n : { 100u, 1000u, 10000u }) {
    const int m = static_cast<int>(std::lround(std::pow(static_cast<double>(n), 0.4)));
    double mean_sup = 0.0;
    for (std::uint64_t stream = 0; stream < 8; ++stream) {
      fejer::RngStream rng(2024, stream);
      const AngleSample s(truth.draw(n, rng));
      const auto g = fejer::density_estimate(s, FejerOrder(m), grid);
      double sup = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i)
        sup = std::max(sup, std::abs(g.values[i] - truth.density(grid[i])));
      mean_sup += sup / 8.0;
    }
    CHECK(mean_sup < prev);
    prev = mean_sup;
  }
}
