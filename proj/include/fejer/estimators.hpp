#pragma once

#include "fejer/kernelmath.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fejer {

/// Observed angles reduced to [-pi, pi), each with a nonnegative weight.
/// Weights default to 1; integer weights reproduce grouped (frequency) data.
class AngleSample
{
public:
  explicit AngleSample(std::span<const double> angles);
  AngleSample(std::span<const double> angles, std::span<const double> weights);

  std::span<const double> angles() const noexcept { return angles_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return angles_.size(); }

  /// Sum of weights; equals size() for an unweighted sample.
  double total_weight() const noexcept { return total_weight_; }
  bool unweighted() const noexcept { return unweighted_; }

  /// Rotates every angle by delta (re-reduced into [-pi, pi)).
  AngleSample rotated(double delta) const;

private:
  std::vector<double> angles_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  bool unweighted_ = true;
};

/// Empirical trigonometric moments a_k = E cos(kX), b_k = E sin(kX), k = 1..M.
/// c holds the unbiased estimates of a_k^2 + b_k^2 (unweighted samples only).
struct TrigMoments
{
  int order = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::optional<std::vector<double>> c;
};

/// Computes moments up to order M >= 1. `unbiased` additionally fills c and
/// requires an unweighted sample with at least two points.
TrigMoments trig_moments(const AngleSample& sample, int order, bool unbiased = false);

enum class EstimateKind
{
  Density,
  Cdf
};

struct EstimateGrid
{
  std::vector<double> theta;
  std::vector<double> values;
  EstimateKind kind = EstimateKind::Density;
  FejerOrder m{ 1 };
  double origin = 0.0; ///< CDF origin; unused for densities
};

/// Evaluates (1/2pi)[1 + 2 sum_k c_k (a_k cos k theta + b_k sin k theta)] at
/// every grid point. Shared by the error-free and deconvolution estimators.
std::vector<double> evaluate_fourier_density(const TrigMoments& moments,
                                             std::span<const double> coefficient_weights,
                                             std::span<const double> grid);

/// Fejer density estimate via the empirical Fourier coefficients.
EstimateGrid density_estimate(const AngleSample& sample, FejerOrder m, std::span<const double> grid);

/// Same estimate as a direct sum of kernels, O(n G). Reference path.
EstimateGrid density_estimate_kernel_sum(const AngleSample& sample,
                                         FejerOrder m,
                                         std::span<const double> grid);

/// Smooth CDF estimate integrated from `origin` along the arc: each grid
/// angle theta is read as the arc position origin + ((theta - origin) mod 2pi),
/// except that origin + 2pi itself is kept, where the value is exactly 1.
EstimateGrid cdf_estimate(const AngleSample& sample,
                          FejerOrder m,
                          double origin,
                          std::span<const double> grid);

} // namespace fejer
