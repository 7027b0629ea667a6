#include "fejer/estimators.hpp"

#include "fejer/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fejer {

AngleSample::AngleSample(std::span<const double> angles)
  : AngleSample(angles, std::vector<double>(angles.size(), 1.0))
{
}

AngleSample::AngleSample(std::span<const double> angles, std::span<const double> weights)
{
  if (angles.empty())
    throw std::invalid_argument("AngleSample: no observations");
  if (angles.size() != weights.size())
    throw std::invalid_argument("AngleSample: angles and weights differ in length");
  angles_.reserve(angles.size());
  weights_.reserve(weights.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i]))
      throw std::invalid_argument("AngleSample: non-finite angle");
    if (!std::isfinite(weights[i]) || weights[i] < 0.0)
      throw std::invalid_argument("AngleSample: weights must be finite and nonnegative");
    angles_.push_back(wrap_angle(angles[i]));
    weights_.push_back(weights[i]);
    total_weight_ += weights[i];
    unweighted_ = unweighted_ && weights[i] == 1.0;
  }
  if (!(total_weight_ > 0.0))
    throw std::invalid_argument("AngleSample: total weight must be positive");
}

AngleSample AngleSample::rotated(double delta) const
{
  std::vector<double> shifted(angles_.size());
  for (std::size_t i = 0; i < angles_.size(); ++i)
    shifted[i] = angles_[i] + delta;
  return AngleSample(shifted, weights_);
}

TrigMoments trig_moments(const AngleSample& sample, int order, bool unbiased)
{
  if (order < 1)
    throw std::invalid_argument("trig_moments: order must be >= 1");
  if (unbiased && !sample.unweighted())
    throw std::invalid_argument("trig_moments: unbiased |phi_k|^2 estimates need an unweighted sample");
  if (unbiased && sample.size() < 2)
    throw DegenerateSample("trig_moments: unbiased estimates need at least two observations");

  TrigMoments tm;
  tm.order = order;
  tm.a.assign(order, 0.0);
  tm.b.assign(order, 0.0);

  const auto angles = sample.angles();
  const auto weights = sample.weights();
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const double w = weights[j];
    if (w == 0.0)
      continue;
    const double c1 = std::cos(angles[j]);
    const double s1 = std::sin(angles[j]);
    double c = 1.0;
    double s = 0.0;
    for (int k = 0; k < order; ++k) {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      tm.a[k] += w * c;
      tm.b[k] += w * s;
    }
  }
  const double total = sample.total_weight();
  for (int k = 0; k < order; ++k) {
    tm.a[k] /= total;
    tm.b[k] /= total;
  }

  if (unbiased) {
    const double n = static_cast<double>(sample.size());
    std::vector<double> c(order);
    for (int k = 0; k < order; ++k)
      c[k] = (n * (tm.a[k] * tm.a[k] + tm.b[k] * tm.b[k]) - 1.0) / (n - 1.0);
    tm.c = std::move(c);
  }
  return tm;
}

std::vector<double> evaluate_fourier_density(const TrigMoments& moments,
                                             std::span<const double> coefficient_weights,
                                             std::span<const double> grid)
{
  if (static_cast<int>(coefficient_weights.size()) != moments.order)
    throw std::invalid_argument("evaluate_fourier_density: one weight per moment required");
  std::vector<double> out(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double c1 = std::cos(grid[g]);
    const double s1 = std::sin(grid[g]);
    double c = 1.0;
    double s = 0.0;
    double acc = 0.0;
    for (int k = 0; k < moments.order; ++k) {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      acc += coefficient_weights[k] * (moments.a[k] * c + moments.b[k] * s);
    }
    out[g] = (1.0 + 2.0 * acc) / kTwoPi;
  }
  return out;
}

namespace {

std::vector<double> fejer_weights(FejerOrder m)
{
  std::vector<double> w(m.value());
  for (int k = 1; k <= m.value(); ++k)
    w[k - 1] = m.weight(k);
  return w;
}

void require_grid(std::span<const double> grid)
{
  if (grid.empty())
    throw std::invalid_argument("evaluation grid is empty");
}

} // namespace

EstimateGrid density_estimate(const AngleSample& sample, FejerOrder m, std::span<const double> grid)
{
  require_grid(grid);
  const auto moments = trig_moments(sample, m.value());
  const auto weights = fejer_weights(m);

  EstimateGrid est;
  est.theta.assign(grid.begin(), grid.end());
  est.values = evaluate_fourier_density(moments, weights, grid);
  // f_hat is a mixture of nonnegative kernels; clear roundoff below zero
  for (double& v : est.values)
    v = std::max(v, 0.0);
  est.kind = EstimateKind::Density;
  est.m = m;
  return est;
}

EstimateGrid density_estimate_kernel_sum(const AngleSample& sample,
                                         FejerOrder m,
                                         std::span<const double> grid)
{
  require_grid(grid);
  EstimateGrid est;
  est.theta.assign(grid.begin(), grid.end());
  est.values.resize(grid.size());
  const auto angles = sample.angles();
  const auto weights = sample.weights();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double acc = 0.0;
    for (std::size_t j = 0; j < angles.size(); ++j)
      acc += weights[j] * fejer_kernel(m, grid[g] - angles[j]);
    est.values[g] = acc / sample.total_weight();
  }
  est.kind = EstimateKind::Density;
  est.m = m;
  return est;
}

EstimateGrid cdf_estimate(const AngleSample& sample,
                          FejerOrder m,
                          double origin,
                          std::span<const double> grid)
{
  require_grid(grid);
  const auto moments = trig_moments(sample, m.value());

  // H(t) = sum_k (g_k/k) (a_k sin kt - b_k cos kt); F(theta) = arc/(2pi) + (H(theta) - H(origin))/pi
  auto conjugate = [&](double t) {
    const double c1 = std::cos(t);
    const double s1 = std::sin(t);
    double c = 1.0;
    double s = 0.0;
    double acc = 0.0;
    for (int k = 1; k <= moments.order; ++k) {
      const double cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      acc += m.weight(k) / k * (moments.a[k - 1] * s - moments.b[k - 1] * c);
    }
    return acc;
  };

  const double h0 = conjugate(origin);
  EstimateGrid est;
  est.theta.assign(grid.begin(), grid.end());
  est.values.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double arc = grid[g] - origin;
    if (arc < 0.0 || arc > kTwoPi)
      arc = wrap_positive(arc);
    double value;
    if (arc == 0.0)
      value = 0.0;
    else if (arc == kTwoPi)
      value = 1.0;
    else
      value = arc / kTwoPi + (conjugate(origin + arc) - h0) / kPi;
    est.values[g] = std::clamp(value, 0.0, 1.0);
  }
  est.kind = EstimateKind::Cdf;
  est.m = m;
  est.origin = origin;
  return est;
}

} // namespace fejer
