#include "fejer/kernelmath.hpp"

#include "fejer/angles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fejer {

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum
{
public:
  void add(double x)
  {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double sign_pow(int k)
{
  return k % 2 == 0 ? 1.0 : -1.0;
}

// sum_{k=1}^m (1 - k/(m+1)) sin(kt)/k using the rotation recurrence for e^{ikt}.
double weighted_sine_series(FejerOrder m, double t)
{
  const double c1 = std::cos(t);
  const double s1 = std::sin(t);
  double c = 1.0;
  double s = 0.0;
  double acc = 0.0;
  for (int k = 1; k <= m.value(); ++k) {
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
    acc += m.weight(k) * s / k;
  }
  return acc;
}

} // namespace

FejerOrder::FejerOrder(int m)
  : m_(m)
{
  if (m < 1)
    throw std::invalid_argument("Fejer order must be >= 1, got " + std::to_string(m));
}

double fejer_kernel_series(FejerOrder m, double s)
{
  double acc = 0.0;
  for (int k = 1; k <= m.value(); ++k)
    acc += m.weight(k) * std::cos(k * s);
  return 1.0 / kTwoPi + acc / kPi;
}

double fejer_kernel(FejerOrder m, double s)
{
  const double x = wrap_angle(s);
  const double mp1 = m.value() + 1.0;
  if (x == 0.0)
    return mp1 / kTwoPi;
  const double half = std::sin(0.5 * x);
  if (std::abs(half) < 1e-6)
    return fejer_kernel_series(m, x);
  const double ratio = std::sin(0.5 * mp1 * x) / half;
  return ratio * ratio / (kTwoPi * mp1);
}

double integrated_kernel_unwrapped(FejerOrder m, double t)
{
  return (t + kPi) / kTwoPi + weighted_sine_series(m, t) / kPi;
}

double integrated_kernel(FejerOrder m, double theta)
{
  double t = theta;
  if (t < -kPi || t > kPi)
    t = wrap_angle(t);
  if (t == kPi)
    return 1.0;
  if (t == -kPi)
    return 0.0;
  const double w = integrated_kernel_unwrapped(m, t);
  return w < 0.0 ? 0.0 : (w > 1.0 ? 1.0 : w);
}

HarmonicSums harmonic_sums(std::int64_t m, int l)
{
  if (m < 1)
    throw std::invalid_argument("harmonic_sums: m must be >= 1");
  if (l < 1 || l > 4)
    throw std::invalid_argument("harmonic_sums: l must be in 1..4");
  CompensatedSum plain;
  CompensatedSum alternating;
  for (std::int64_t k = m; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    double term = 1.0 / kd;
    for (int p = 1; p < l; ++p)
      term /= kd;
    plain.add(term);
    alternating.add(k % 2 == 1 ? term : -term);
  }
  return { plain.value(), alternating.value() };
}

Nu3Terms nu3_terms(FejerOrder order)
{
  const int m = order.value();
  const double pi2 = kPi * kPi;

  CompensatedSum p;
  CompensatedSum diag;
  for (int k = 1; k <= m; ++k) {
    const double kd = k;
    const double k4 = kd * kd * kd * kd;
    const double g = order.weight(k);
    p.add(g * sign_pow(k) * (kd * kd * pi2 - 6.0) / k4);
    diag.add(g * g * (3.0 - 2.0 * kd * kd * pi2) / k4);
  }

  // Off-diagonal sum, symmetrised over (k, l) <-> (l, k):
  // S_{m,2} = -(24/pi) sum_{l<k} g_k g_l (-1)^{k+l} / (k^2 - l^2)^2.
  CompensatedSum off;
  for (int k = 2; k <= m; ++k) {
    const double gk = order.weight(k);
    const double k2 = static_cast<double>(k) * k;
    double row = 0.0;
    for (int l = 1; l < k; ++l) {
      const double d = k2 - static_cast<double>(l) * l;
      const double term = gk * order.weight(l) / (d * d);
      row += ((k + l) % 2 == 0) ? term : -term;
    }
    off.add(row);
  }

  Nu3Terms t{};
  t.t1 = pi2 * kPi / 10.0;
  t.t2 = 4.0 / kPi * p.value();
  t.t3 = -p.value() / kPi;
  t.s1 = diag.value() / (4.0 * kPi);
  t.s2 = -24.0 / kPi * off.value();
  return t;
}

KernelMoments kernel_moments_exact(FejerOrder order)
{
  const int m = order.value();
  const double md = m;
  const double inv = 1.0 / (md + 1.0);
  const double pi2 = kPi * kPi;

  const auto h1 = harmonic_sums(m, 1);
  const auto h2 = harmonic_sums(m, 2);
  const auto h3 = harmonic_sums(m, 3);
  const auto h4 = harmonic_sums(m, 4);

  KernelMoments km{};
  km.alpha = 1.0 / kTwoPi + md * (2.0 * md + 1.0) / (6.0 * kPi * (md + 1.0));
  km.beta = pi2 / 3.0 - 4.0 * h2.alternating + 4.0 * inv * h1.alternating;
  km.gamma3 = pi2 * kPi / 4.0 +
              6.0 / kPi * (-pi2 * h2.alternating + 2.0 * h4.alternating + 2.0 * h4.plain) -
              6.0 * inv / kPi * (-pi2 * h1.alternating + 2.0 * h3.alternating + 2.0 * h3.plain);
  km.m4 = pi2 * pi2 / 5.0 - 8.0 * pi2 * (h2.alternating - inv * h1.alternating) +
          48.0 * (h4.alternating - inv * h3.alternating);
  km.nu1 = pi2 / 3.0 + 4.0 * (-h2.alternating + inv * h1.alternating) +
           2.0 * (h2.alternating - inv * h1.alternating) -
           (h2.plain - 2.0 * inv * h1.plain + md * inv * inv);

  const auto t = nu3_terms(order);
  km.nu3 = t.t1 + t.t2 + t.t3 + t.s1 + t.s2;
  return km;
}

KernelMoments kernel_moments_quadrature(FejerOrder m, int points_per_period)
{
  const long needed = 64L * (m.value() + 1L);
  if (points_per_period < needed)
    throw std::invalid_argument("kernel_moments_quadrature: need at least " +
                                std::to_string(needed) + " points for m = " +
                                std::to_string(m.value()));
  const int n = points_per_period + (points_per_period % 2);

  auto k = [m](double y) { return fejer_kernel(m, y); };
  auto w = [m](double y) {
    return (y + kPi) / kTwoPi + weighted_sine_series(m, y) / kPi;
  };

  KernelMoments km{};
  km.alpha = simpson([&](double y) { return k(y) * k(y); }, -kPi, kPi, n);
  km.beta = simpson([&](double y) { return y * y * k(y); }, -kPi, kPi, n);
  km.gamma3 = simpson([&](double y) { return std::abs(y * y * y) * k(y); }, -kPi, kPi, n);
  km.m4 = simpson([&](double y) { return y * y * y * y * k(y); }, -kPi, kPi, n);
  km.nu1 = kTwoPi * simpson([&](double y) { return y * w(y) * k(y); }, -kPi, kPi, n);
  km.nu3 = simpson([&](double y) { return y * y * y * w(y) * k(y); }, -kPi, kPi, n);
  return km;
}

double lambert_w0(double z)
{
  constexpr double inv_e = 0.36787944117144232160;
  if (std::isnan(z) || z < -inv_e - 1e-15)
    throw std::domain_error("lambert_w0: argument below -1/e");
  if (z == 0.0)
    return 0.0;
  if (z <= -inv_e)
    return -1.0;
  if (std::isinf(z))
    return z;

  double w;
  if (z > std::numbers::e) {
    const double lz = std::log(z);
    w = lz - std::log(lz);
  } else if (z < -0.25) {
    const double p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    w = z * (1.0 - z + 1.5 * z * z);
    if (z > 1.0)
      w = std::log1p(z) * 0.75;
  }

  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0)
      break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w)))
      break;
  }
  return w;
}

} // namespace fejer
