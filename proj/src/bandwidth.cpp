#include "fejer/bandwidth.hpp"

#include "fejer/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fejer {

namespace {

constexpr int kCdfTruncation = 512;
constexpr int kTheta1Intervals = 4096;

} // namespace

VonMisesFit fit_von_mises(const AngleSample& sample)
{
  if (sample.size() < 2)
    throw DegenerateSample("von Mises fit needs at least two observations");
  const auto m = trig_moments(sample, 1);
  VonMisesFit fit;
  fit.rbar = std::hypot(m.a[0], m.b[0]);
  if (fit.rbar < 1e-12)
    fit.rbar = 0.0;
  if (fit.rbar >= 1.0 - 1e-12)
    throw DegenerateSample("sample is concentrated at a single direction (mean resultant length ~ 1)");
  fit.mu = fit.rbar > 0.0 ? wrap_angle(std::atan2(m.b[0], m.a[0])) : 0.0;
  fit.kappa = inverse_mean_resultant_vm(fit.rbar);
  return fit;
}

Theta1Estimate theta1_parametric_vm(const AngleSample& sample)
{
  const auto fit = fit_von_mises(sample);
  Theta1Estimate est;
  est.method = Theta1Method::ParametricVonMises;
  est.kappa_hat = fit.kappa;
  est.mu_hat = fit.mu;
  if (fit.kappa == 0.0)
    return est;
  const auto model = CircularModel::von_mises(fit.mu, fit.kappa);
  est.value = simpson(
    [&](double t) {
      const double d = -fit.kappa * std::sin(t - fit.mu) * model.density(t);
      return d * d;
    },
    -kPi,
    kPi,
    kTheta1Intervals);
  return est;
}

int default_moment_order(std::size_t n)
{
  return std::max(1, static_cast<int>(std::lround(2.0 * std::pow(static_cast<double>(n), 0.25))));
}

Theta1Estimate theta1_nonparametric(const AngleSample& sample, int M, bool unbiased)
{
  if (M < 1)
    throw std::invalid_argument("theta1_nonparametric: M must be >= 1");
  const auto tm = trig_moments(sample, M, unbiased);
  double acc = 0.0;
  for (int k = 1; k <= M; ++k) {
    const double power =
      unbiased ? (*tm.c)[k - 1] : tm.a[k - 1] * tm.a[k - 1] + tm.b[k - 1] * tm.b[k - 1];
    acc += static_cast<double>(k) * k * power;
  }
  Theta1Estimate est;
  est.method = unbiased ? Theta1Method::NonparametricUnbiased : Theta1Method::NonparametricBiased;
  est.M_used = M;
  est.value = acc / kPi;
  if (est.value < 0.0) {
    est.value = 0.0;
    est.clamped = true;
  }
  return est;
}

FejerOrder round_order(double m_real)
{
  if (!(m_real >= 1.5))
    return FejerOrder(1);
  constexpr double cap = 1e7;
  return FejerOrder(static_cast<int>(std::lround(std::min(m_real, cap))));
}

BandwidthResult m_opt_density(double theta1, std::size_t n)
{
  if (n < 1)
    throw std::invalid_argument("m_opt_density: n must be >= 1");
  BandwidthResult r;
  r.target = BandwidthTarget::Density;
  r.theta_estimate = theta1;
  if (!(theta1 > 0.0)) {
    r.degenerate = true;
    return r;
  }
  r.m_real = std::cbrt(6.0 * kPi * theta1) * std::cbrt(static_cast<double>(n));
  r.m = round_order(r.m_real);
  return r;
}

BandwidthResult m_opt_density(const Theta1Estimate& theta1, std::size_t n)
{
  auto r = m_opt_density(theta1.value, n);
  r.kappa_hat = theta1.kappa_hat;
  return r;
}

BandwidthResult m_opt_cdf_from_constant(double c, double n)
{
  if (!(n >= 1.0))
    throw std::invalid_argument("m_opt_cdf: n must be >= 1");
  BandwidthResult r;
  r.target = BandwidthTarget::Cdf;
  r.c = c;
  const double cn = c * n;
  r.w0_argument = cn / std::numbers::e;
  if (!(cn > 0.0) || !std::isfinite(cn)) {
    r.degenerate = true;
    return r;
  }
  r.m_real = cn / lambert_w0(r.w0_argument);
  r.m = round_order(r.m_real);
  return r;
}

BandwidthResult m_opt_cdf_from_functionals(double theta2, double density_at_origin, double n)
{
  const double c = kPi * theta2 / (1.0 + kTwoPi * density_at_origin);
  auto r = m_opt_cdf_from_constant(c, n);
  r.theta_estimate = theta2;
  return r;
}

BandwidthResult m_opt_cdf(const AngleSample& sample, double origin)
{
  const auto fit = fit_von_mises(sample);
  const auto model = CircularModel::von_mises(fit.mu, fit.kappa);
  const auto coeffs = model.fourier_coeffs(kCdfTruncation);
  auto r = m_opt_cdf_from_functionals(theta2(coeffs, origin), model.density(origin), sample.total_weight());
  r.kappa_hat = fit.kappa;
  return r;
}

BandwidthResult m_opt_cdf(const CircularModel& model, double origin, double n)
{
  return m_opt_cdf_from_functionals(theta2(model, origin), model.density(origin), n);
}

BandwidthResult m_opt_classical_wl(double theta1, std::size_t n, double rho)
{
  if (!(rho > 0.0))
    throw std::invalid_argument("m_opt_classical_wl: rho must be positive");
  if (n < 1)
    throw std::invalid_argument("m_opt_classical_wl: n must be >= 1");
  BandwidthResult r;
  r.target = BandwidthTarget::ClassicalWL;
  r.theta_estimate = theta1;
  r.rho = rho;
  if (!(theta1 > 0.0)) {
    r.degenerate = true;
    return r;
  }
  const double r4 = rho * rho * rho * rho;
  r.m_real = std::pow(42.0 * kPi * theta1 * static_cast<double>(n) / r4, 1.0 / 7.0);
  r.m = round_order(r.m_real);
  return r;
}

BandwidthResult m_opt_classical_wl(const Theta1Estimate& theta1, std::size_t n, double rho)
{
  auto r = m_opt_classical_wl(theta1.value, n, rho);
  r.kappa_hat = theta1.kappa_hat;
  return r;
}

} // namespace fejer
