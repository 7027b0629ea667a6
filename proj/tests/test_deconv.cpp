#include "fejer/deconv.hpp"

#include "fejer/angles.hpp"
#include "fejer/rng.hpp"
#include "fejer/simdist.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using fejer::AngleSample;
using fejer::ErrorModel;
using fejer::FejerOrder;
using fejer::kPi;

namespace {

AngleSample draw_sample(const fejer::CircularModel& model, std::size_t n, std::uint64_t seed)
{
  fejer::RngStream rng(seed, 0);
  return AngleSample(model.draw(n, rng));
}

} // namespace

TEST_CASE("error characteristic functions")
{
  const auto none = ErrorModel::none();
  const auto wl = ErrorModel::wrapped_laplace(0.2);
  const auto wu = ErrorModel::wrapped_uniform(kPi / 12.0);
  const auto vm = ErrorModel::von_mises(3.0);
  for (int j = 1; j <= 60; ++j) {
    CHECK(none.lambda(j) == 1.0);
    CHECK(wl.lambda(j) == doctest::Approx(1.0 / (1.0 + 0.04 * j * j)).epsilon(1e-14));
    CHECK(wl.lambda(j) > 0.0);
    CHECK(wu.lambda(j) == doctest::Approx(std::sin(j * kPi / 12.0) / (j * kPi / 12.0)).epsilon(1e-14));
    CHECK(vm.lambda(j) == doctest::Approx(std::cyl_bessel_i(double(j), 3.0) / std::cyl_bessel_i(0.0, 3.0)).epsilon(1e-10));
    for (const auto* e : { &none, &wl, &wu, &vm }) {
      CHECK(e->lambda(j) <= 1.0);
      CHECK(e->lambda(j) >= -1.0);
      CHECK(e->lambda(-j) == e->lambda(j));
    }
  }
  CHECK(std::abs(wu.lambda(12)) < 1e-15);
  CHECK(ErrorModel::wrapped_laplace(1.0).lambda(1) == 0.5);

  CHECK_THROWS_AS(ErrorModel::wrapped_laplace(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ErrorModel::wrapped_uniform(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ErrorModel::wrapped_uniform(4.0), std::invalid_argument);
  CHECK_THROWS_AS(ErrorModel::von_mises(-1.0), std::invalid_argument);
}

TEST_CASE("error samplers match their characteristic functions")
{
  const std::size_t n = 40000;
  for (const auto& e : { ErrorModel::wrapped_laplace(0.5), ErrorModel::wrapped_laplace(0.2),
                         ErrorModel::wrapped_uniform(kPi / 12.0), ErrorModel::von_mises(2.0) }) {
    CAPTURE(e.label());
    fejer::RngStream rng(314, 0);
    std::vector<double> c(4, 0.0);
    std::vector<double> s(4, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = e.draw(rng);
      for (int j = 1; j <= 4; ++j) {
        c[j - 1] += std::cos(j * x) / n;
        s[j - 1] += std::sin(j * x) / n;
      }
    }
    for (int j = 1; j <= 4; ++j) {
      CHECK(std::abs(c[j - 1] - e.lambda(j)) < 4.0 / std::sqrt(double(n)));
      CHECK(std::abs(s[j - 1]) < 4.0 / std::sqrt(double(n)));
    }
  }
}

TEST_CASE("Berkson-contaminated samples follow the convolved model")
{
  const auto model = fejer::CircularModel::von_mises(0.5, 3.0);
  const auto err = ErrorModel::wrapped_laplace(0.3);
  const std::size_t n = 20000;
  fejer::RngStream rng(8, 1);
  std::vector<double> x(n);
  for (auto& v : x)
    v = fejer::wrap_angle(model.draw(rng) + err.draw(rng));
  const auto truth = fejer::convolve_model(model.fourier_coeffs(6), err);
  for (int k = 1; k <= 6; ++k) {
    double c = 0.0;
    double s = 0.0;
    for (double v : x) {
      c += std::cos(k * v) / n;
      s += std::sin(k * v) / n;
    }
    CHECK(std::abs(c - truth.a[k - 1]) < 4.0 / std::sqrt(double(n)));
    CHECK(std::abs(s - truth.b[k - 1]) < 4.0 / std::sqrt(double(n)));
  }
}

TEST_CASE("no error reduces to the plain estimator")
{
  const auto s = draw_sample(fejer::CircularModel::wrapped_normal(1.0, 0.8), 70, 2);
  const auto grid = fejer::uniform_grid(200);
  const auto plain = fejer::density_estimate(s, FejerOrder(9), grid);
  const auto b = fejer::berkson_estimate(s, FejerOrder(9), ErrorModel::none(), grid);
  const auto c = fejer::classical_estimate(s, FejerOrder(9), ErrorModel::none(), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(b.grid.values[i] - plain.values[i]) < 1e-12);
    CHECK(std::abs(c.grid.values[i] - plain.values[i]) < 1e-12);
  }
}

TEST_CASE("single point by hand")
{
  const AngleSample s(std::vector<double>{ 0.0 });
  const auto err = ErrorModel::wrapped_laplace(1.0);
  const auto grid = fejer::uniform_grid(32);
  const auto b = fejer::berkson_estimate(s, FejerOrder(1), err, grid);
  const auto c = fejer::classical_estimate(s, FejerOrder(1), err, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    CHECK(b.grid.values[i] == doctest::Approx((1.0 + std::cos(x) / 2.0) / (2.0 * kPi)).epsilon(1e-13));
    CHECK(c.grid.values[i] == doctest::Approx((1.0 + 2.0 * std::cos(x)) / (2.0 * kPi)).epsilon(1e-13));
  }
  CHECK(b.negative_points == 0);
  CHECK_FALSE(b.clipped);
}

TEST_CASE("estimates integrate to one")
{
  const auto s = draw_sample(fejer::CircularModel::von_mises(-1.0, 4.0), 120, 9);
  const auto grid = fejer::uniform_grid(2048);
  for (const auto& e : { ErrorModel::wrapped_laplace(0.2), ErrorModel::wrapped_uniform(kPi / 12.0), ErrorModel::von_mises(10.0) }) {
    const auto b = fejer::berkson_estimate(s, FejerOrder(15), e, grid);
    const auto c = fejer::classical_estimate(s, FejerOrder(8), e, grid);
    CHECK(std::abs(oracle::trapezoid_periodic(b.grid.values) - 1.0) < 1e-6);
    CHECK(std::abs(oracle::trapezoid_periodic(c.grid.values) - 1.0) < 1e-6);
  }
}

TEST_CASE("classical deconvolution rejects vanishing lambda")
{
  const AngleSample s(std::vector<double>{ 0.0, 1.0 });
  const auto grid = fejer::uniform_grid(16);
  const auto wide = ErrorModel::wrapped_uniform(kPi / 2.0); // lambda(2) = 0
  CHECK_NOTHROW(fejer::classical_estimate(s, FejerOrder(1), wide, grid));
  try {
    fejer::classical_estimate(s, FejerOrder(3), wide, grid);
    FAIL("expected InfeasibleDeconvolution");
  } catch (const fejer::InfeasibleDeconvolution& e) {
    CHECK(e.order() == 2);
  }
  CHECK_THROWS_AS(fejer::classical_weights(FejerOrder(3), wide), fejer::InfeasibleDeconvolution);
}

TEST_CASE("coefficient round trip")
{
  for (const auto& e : { ErrorModel::wrapped_laplace(0.3), ErrorModel::wrapped_uniform(0.2), ErrorModel::von_mises(5.0) }) {
    for (int m : { 1, 6, 12 }) {
      const FejerOrder fm(m);
      const auto cw = fejer::classical_weights(fm, e);
      REQUIRE(cw.size() == static_cast<std::size_t>(m));
      for (int l = 1; l <= m; ++l) {
        // deconvolve then re-convolve: back to the bare Fejer taper
        CHECK(cw[l - 1] * e.lambda(l) == doctest::Approx(fm.weight(l)).epsilon(1e-14));
      }
      const auto bw = fejer::berkson_weights(fm, e);
      for (int l = 1; l <= m; ++l)
        CHECK(bw[l - 1] == doctest::Approx(fm.weight(l) * e.lambda(l)).epsilon(1e-14));
    }
  }
}

TEST_CASE("Berkson Laplace estimate shrinks every coefficient")
{
  const auto s = draw_sample(fejer::CircularModel::von_mises(0.0, 2.0), 60, 4);
  const auto grid = fejer::uniform_grid(512);
  const auto plain = fejer::density_estimate(s, FejerOrder(12), grid);
  const auto berk = fejer::berkson_estimate(s, FejerOrder(12), ErrorModel::wrapped_laplace(0.25), grid);
  auto modulus = [&](const std::vector<double>& v, int l) {
    double c = 0.0;
    double sn = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      c += v[i] * std::cos(l * grid[i]);
      sn += v[i] * std::sin(l * grid[i]);
    }
    return std::hypot(c, sn) * 2.0 * kPi / grid.size();
  };
  for (int l = 1; l <= 12; ++l)
    CHECK(modulus(berk.grid.values, l) <= modulus(plain.values, l) + 1e-12);
}

TEST_CASE("convolving model coefficients")
{
  const auto vm = fejer::CircularModel::von_mises(0.3, 2.5);
  const auto coeffs = vm.fourier_coeffs(10);
  const auto same = fejer::convolve_model(coeffs, ErrorModel::none());
  CHECK(same.a == coeffs.a);
  CHECK(same.b == coeffs.b);

  const auto flat = fejer::convolve_model(fejer::CircularModel::uniform().fourier_coeffs(10), ErrorModel::wrapped_laplace(0.2));
  for (int k = 0; k < 10; ++k) {
    CHECK(flat.a[k] == 0.0);
    CHECK(flat.b[k] == 0.0);
  }

  // Convolution integral by quadrature: E cos(k (X + e)) with independent X, e.
  const auto err = ErrorModel::wrapped_laplace(0.5);
  const auto conv = fejer::convolve_model(coeffs, err);
  const double rho = 0.5;
  auto laplace = [&](double e) {
    // wrapped Laplace density with scale rho
    double acc = 0.0;
    for (int w = -20; w <= 20; ++w)
      acc += std::exp(-std::abs(e + 2.0 * kPi * w) / rho) / (2.0 * rho);
    return acc;
  };
  for (int k = 1; k <= 5; ++k) {
    auto inner = [&](double x) {
      auto g = [&](double e) { return laplace(e) * std::cos(k * (x + e)); };
      return vm.density(x) * (oracle::gauss_legendre(g, -kPi, 0.0, 64) + oracle::gauss_legendre(g, 0.0, kPi, 64));
    };
    const double a = oracle::gauss_legendre(inner, -kPi, kPi, 64);
    CHECK(std::abs(conv.a[k - 1] - a) < 1e-8);
    CHECK(conv.a[k - 1] == doctest::Approx(coeffs.a[k - 1] * err.lambda(k)).epsilon(1e-14));
  }
}

TEST_CASE("negative values are reported and optionally clipped")
{
  const auto s = draw_sample(fejer::CircularModel::von_mises(0.0, 1.0), 15, 6);
  const auto grid = fejer::uniform_grid(512);
  const auto err = ErrorModel::wrapped_laplace(0.6);
  const auto raw = fejer::classical_estimate(s, FejerOrder(10), err, grid);
  REQUIRE(raw.negative_points > 0);
  CHECK(raw.min_value < 0.0);
  CHECK_FALSE(raw.clipped);

  const auto clipped = fejer::classical_estimate(s, FejerOrder(10), err, grid, { true });
  CHECK(clipped.clipped);
  CHECK(clipped.min_value < 0.0);
  for (double v : clipped.grid.values)
    CHECK(v >= 0.0);
  CHECK(std::abs(oracle::trapezoid_periodic(clipped.grid.values) - 1.0) < 1e-9);
}
