#include "fejer/origin.hpp"

#include "fejer/angles.hpp"
#include "fejer/rng.hpp"
#include "fejer/simdist.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using fejer::AngleSample;
using fejer::kPi;

namespace {

// C_n straight from its definition: unwrap to [t0, t0 + 2pi), sort, sum.
double cn_oracle(const std::vector<double>& x, double t0)
{
  std::vector<double> u;
  for (double v : x) {
    double d = std::fmod(v - t0, 2.0 * kPi);
    if (d < 0.0)
      d += 2.0 * kPi;
    u.push_back(d);
  }
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double c = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const double p = i / n;
    c += p * (1.0 - p) * (u[i] - u[i - 1]);
  }
  return c;
}

std::vector<double> vm_draws(double mu, double kappa, std::size_t n, std::uint64_t seed, std::uint64_t stream = 0)
{
  fejer::RngStream rng(seed, stream);
  return fejer::CircularModel::von_mises(mu, kappa).draw(n, rng);
}

} // namespace

TEST_CASE("criterion of two antipodal points")
{
  const AngleSample s(std::vector<double>{ -kPi / 2.0, kPi / 2.0 });
  CHECK(fejer::criterion_cn(s, -kPi) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(fejer::criterion_cn(s, 0.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(fejer::criterion_cn(s, -kPi) == doctest::Approx(0.7854).epsilon(1e-4));
  CHECK_THROWS_AS(fejer::criterion_cn(AngleSample(std::vector<double>{ 1.0 }), 0.0), fejer::DegenerateSample);
  CHECK_THROWS_AS(fejer::select_origin(AngleSample(std::vector<double>{ 1.0 })), fejer::DegenerateSample);
}

TEST_CASE("criterion matches the definition")
{
  const auto x = vm_draws(0.7, 1.5, 41, 5);
  const AngleSample s(x);
  for (double t0 = -kPi; t0 < kPi; t0 += 0.173) {
    const double c = fejer::criterion_cn(s, t0);
    CHECK(c == doctest::Approx(cn_oracle(x, t0)).epsilon(1e-12));
    CHECK(c >= 0.0);
    CHECK(c <= kPi / 2.0);
  }
}

TEST_CASE("criterion is constant between data points")
{
  const auto x = vm_draws(0.0, 1.0, 30, 8);
  std::vector<double> sorted(x);
  std::sort(sorted.begin(), sorted.end());
  const AngleSample s(x);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double a = sorted[i];
    const double b = sorted[i + 1];
    if (b - a < 1e-9)
      continue;
    const double c1 = fejer::criterion_cn(s, a + 0.25 * (b - a));
    const double c2 = fejer::criterion_cn(s, a + 0.75 * (b - a));
    CHECK(std::abs(c1 - c2) < 1e-15);
  }
}

TEST_CASE("selection is exact over gaps")
{
  const auto x = vm_draws(2.0, 0.8, 57, 12);
  const AngleSample s(x);
  const auto r = fejer::select_origin(s);

  double lo = 1e9;
  double hi = -1e9;
  for (int i = 0; i < 20000; ++i) {
    const double c = cn_oracle(x, -kPi + 2.0 * kPi * i / 20000.0);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(r.criterion_min == doctest::Approx(lo).epsilon(1e-12));
  CHECK(r.criterion_max >= hi - 1e-12);
  CHECK(r.criterion_min <= r.criterion_max);
  CHECK(fejer::criterion_cn(s, r.theta0) == doctest::Approx(r.criterion_min).epsilon(1e-12));

  const double mid = fejer::wrap_angle(r.minimizing_arc.start + 0.5 * r.minimizing_arc.width());
  CHECK(std::abs(fejer::circular_difference(mid, r.theta0)) < 1e-12);
  CHECK(r.theta0 >= -kPi);
  CHECK(r.theta0 < kPi);
}

TEST_CASE("ties pick the first gap from -pi")
{
  const AngleSample s(std::vector<double>{ -kPi / 2.0, kPi / 2.0 });
  const auto r = fejer::select_origin(s);
  CHECK(r.minimizing_arcs.size() == 2);
  const bool expected = std::abs(r.theta0) < 1e-12 || std::abs(r.theta0 + kPi) < 1e-12;
  CHECK(expected);
  CHECK(r.theta0 == doctest::Approx(-kPi).epsilon(1e-12));
}

TEST_CASE("ties prefer the widest gap")
{
  // Rounded data: every gap is pi/6 except one double-width gap.
  std::vector<double> x;
  for (int j = 0; j < 12; ++j)
    if (j != 4)
      x.push_back(-kPi + j * kPi / 6.0);
  for (int rep = 0; rep < 2; ++rep)
    for (double v : std::vector<double>(x))
      x.push_back(v);
  const auto r = fejer::select_origin(AngleSample(x));
  for (const auto& arc : r.minimizing_arcs)
    CHECK(r.minimizing_arc.width() >= arc.width() - 1e-12);
}

TEST_CASE("selection is rotation equivariant")
{
  const auto x = vm_draws(0.3, 2.0, 80, 31);
  const AngleSample s(x);
  const auto r = fejer::select_origin(s);
  for (double delta : { 0.4, -1.9, 3.0 }) {
    const auto q = fejer::select_origin(s.rotated(delta));
    CHECK(std::abs(fejer::circular_difference(q.theta0, r.theta0 + delta)) < 1e-9);
    CHECK(q.criterion_min == doctest::Approx(r.criterion_min).epsilon(1e-9));
  }
}

TEST_CASE("criterion range for a concentrated sample")
{
  double lo = 0.0;
  double hi = 0.0;
  const int reps = 10;
  for (int r = 0; r < reps; ++r) {
    const auto res = fejer::select_origin(AngleSample(vm_draws(kPi / 2.0, 2.0, 200, 2024, r)));
    lo += res.criterion_min / reps;
    hi += res.criterion_max / reps;
  }
  CHECK(std::abs(lo - 0.48) <= 0.1);
  CHECK(std::abs(hi - 1.38) <= 0.1);
}

TEST_CASE("selected origin sits at the antimode")
{
  auto mean_origin = [](double mu, std::size_t n, int reps) {
    std::vector<double> t;
    for (int r = 0; r < reps; ++r)
      t.push_back(fejer::select_origin(AngleSample(vm_draws(mu, 5.0, n, 77, r))).theta0);
    return fejer::circular_mean(t);
  };
  CHECK(std::abs(fejer::circular_difference(mean_origin(kPi / 2.0, 200, 50), -1.57)) < 0.1);
  CHECK(std::abs(fejer::circular_difference(mean_origin(0.0, 200, 50), -3.14)) < 0.1);

  for (double mu : { 0.0, 1.0, -2.5 }) {
    const auto r = fejer::select_origin(AngleSample(vm_draws(mu, 2.0, 2000, 5)));
    CHECK(std::abs(fejer::circular_difference(r.theta0, mu + kPi)) < 0.15);
  }
}

TEST_CASE("weighted criterion equals repeated points")
{
  const AngleSample rep(std::vector<double>{ 0.1, 0.1, 0.1, 1.5, -2.0, -2.0 });
  const AngleSample wtd(std::vector<double>{ 0.1, 1.5, -2.0 }, std::vector<double>{ 3.0, 1.0, 2.0 });
  for (double t0 : { -kPi, -1.0, 0.5, 2.0 })
    CHECK(fejer::criterion_cn(wtd, t0) == doctest::Approx(fejer::criterion_cn(rep, t0)).epsilon(1e-13));
  const auto a = fejer::select_origin(rep);
  const auto b = fejer::select_origin(wtd);
  CHECK(a.theta0 == doctest::Approx(b.theta0).epsilon(1e-13));
  CHECK(a.criterion_min == doctest::Approx(b.criterion_min).epsilon(1e-13));
}
