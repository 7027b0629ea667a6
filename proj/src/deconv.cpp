#include "fejer/deconv.hpp"

#include "fejer/angles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fejer {

namespace {

constexpr double kLambdaFloor = 1e-10;

std::string format_number(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

DeconvolutionEstimate finish(const AngleSample& sample,
                             FejerOrder m,
                             const std::vector<double>& weights,
                             std::span<const double> grid,
                             const DeconvolutionOptions& options)
{
  if (grid.empty())
    throw std::invalid_argument("evaluation grid is empty");
  const auto moments = trig_moments(sample, m.value());

  DeconvolutionEstimate out;
  out.grid.theta.assign(grid.begin(), grid.end());
  out.grid.values = evaluate_fourier_density(moments, weights, grid);
  out.grid.kind = EstimateKind::Density;
  out.grid.m = m;

  out.min_value = *std::min_element(out.grid.values.begin(), out.grid.values.end());
  out.negative_points = static_cast<std::size_t>(
    std::count_if(out.grid.values.begin(), out.grid.values.end(), [](double v) { return v < 0.0; }));

  if (options.clip_and_renormalize && out.negative_points > 0) {
    require_uniform_grid(grid);
    double mass = 0.0;
    for (double& v : out.grid.values) {
      v = std::max(v, 0.0);
      mass += v;
    }
    mass *= kTwoPi / static_cast<double>(grid.size());
    if (mass > 0.0)
      for (double& v : out.grid.values)
        v /= mass;
    out.clipped = true;
  }
  return out;
}

} // namespace

ErrorModel ErrorModel::wrapped_laplace(double rho)
{
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("wrapped Laplace error needs rho > 0");
  ErrorModel e;
  e.kind_ = ErrorKind::WrappedLaplace;
  e.param_ = rho;
  return e;
}

ErrorModel ErrorModel::wrapped_uniform(double halfwidth)
{
  if (!(halfwidth > 0.0 && halfwidth <= kPi))
    throw std::invalid_argument("wrapped uniform error needs 0 < a <= pi");
  ErrorModel e;
  e.kind_ = ErrorKind::WrappedUniform;
  e.param_ = halfwidth;
  return e;
}

ErrorModel ErrorModel::von_mises(double kappa)
{
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("von Mises error needs kappa >= 0");
  ErrorModel e;
  e.kind_ = ErrorKind::VonMisesError;
  e.param_ = kappa;
  return e;
}

double ErrorModel::lambda(int j) const
{
  if (j == 0)
    return 1.0;
  j = std::abs(j);
  switch (kind_) {
    case ErrorKind::None:
      return 1.0;
    case ErrorKind::WrappedLaplace: {
      const double x = param_ * j;
      return 1.0 / (1.0 + x * x);
    }
    case ErrorKind::WrappedUniform: {
      const double x = j * param_;
      return std::sin(x) / x;
    }
    case ErrorKind::VonMisesError:
      return bessel_ratios(param_, j)[j - 1];
  }
  return 1.0;
}

double ErrorModel::draw(RngStream& rng) const
{
  switch (kind_) {
    case ErrorKind::None:
      return 0.0;
    case ErrorKind::WrappedLaplace:
      // difference of two unit exponentials is a unit Laplace variable
      return wrap_angle(param_ * (rng.exponential() - rng.exponential()));
    case ErrorKind::WrappedUniform:
      return wrap_angle(param_ * (2.0 * rng.uniform() - 1.0));
    case ErrorKind::VonMisesError:
      return draw_von_mises(0.0, param_, rng);
  }
  return 0.0;
}

std::string ErrorModel::label() const
{
  switch (kind_) {
    case ErrorKind::None:
      return "none";
    case ErrorKind::WrappedLaplace:
      return "laplace:" + format_number(param_);
    case ErrorKind::WrappedUniform:
      return "uniform:" + format_number(param_);
    case ErrorKind::VonMisesError:
      return "vm:" + format_number(param_);
  }
  return {};
}

std::vector<double> berkson_weights(FejerOrder m, const ErrorModel& err)
{
  std::vector<double> w(m.value());
  for (int l = 1; l <= m.value(); ++l)
    w[l - 1] = m.weight(l) * err.lambda(l);
  return w;
}

std::vector<double> classical_weights(FejerOrder m, const ErrorModel& err)
{
  std::vector<double> w(m.value());
  for (int l = 1; l <= m.value(); ++l) {
    const double lam = err.lambda(l);
    if (std::abs(lam) < kLambdaFloor)
      throw InfeasibleDeconvolution(l, lam);
    w[l - 1] = m.weight(l) / lam;
  }
  return w;
}

DeconvolutionEstimate berkson_estimate(const AngleSample& sample,
                                       FejerOrder m,
                                       const ErrorModel& err,
                                       std::span<const double> grid,
                                       DeconvolutionOptions options)
{
  return finish(sample, m, berkson_weights(m, err), grid, options);
}

DeconvolutionEstimate classical_estimate(const AngleSample& sample,
                                         FejerOrder m,
                                         const ErrorModel& err,
                                         std::span<const double> grid,
                                         DeconvolutionOptions options)
{
  return finish(sample, m, classical_weights(m, err), grid, options);
}

FourierCoeffs convolve_model(const FourierCoeffs& coeffs, const ErrorModel& err)
{
  FourierCoeffs out = coeffs;
  for (int k = 1; k <= out.order(); ++k) {
    const double lam = err.lambda(k);
    out.a[k - 1] *= lam;
    out.b[k - 1] *= lam;
  }
  return out;
}

} // namespace fejer
