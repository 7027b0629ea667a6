#pragma once

#include "fejer/estimators.hpp"
#include "fejer/rng.hpp"
#include "fejer/simdist.hpp"

#include <span>
#include <string>

namespace fejer {

enum class ErrorKind
{
  None,
  WrappedLaplace,
  WrappedUniform,
  VonMisesError
};

/// Symmetric circular error law, described by its Fourier coefficients lambda(j).
class ErrorModel
{
public:
  ErrorModel() = default; ///< no error, lambda = 1

  static ErrorModel none() { return {}; }
  /// Laplace with scale rho > 0 wrapped on the circle: lambda(j) = 1 / (1 + rho^2 j^2).
  static ErrorModel wrapped_laplace(double rho);
  /// Uniform on [-a, a], 0 < a <= pi: lambda(j) = sin(ja)/(ja).
  static ErrorModel wrapped_uniform(double halfwidth);
  /// von Mises(0, kappa): lambda(j) = I_j(kappa)/I_0(kappa).
  static ErrorModel von_mises(double kappa);

  ErrorKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }

  double lambda(int j) const;

  /// One error draw in [-pi, pi).
  double draw(RngStream& rng) const;

  /// "none", "laplace:0.2", "uniform:0.261799", "vm:5".
  std::string label() const;

private:
  ErrorKind kind_ = ErrorKind::None;
  double param_ = 0.0;
};

/// Estimate plus negativity diagnostics.
struct DeconvolutionEstimate
{
  EstimateGrid grid;
  double min_value = 0.0;
  std::size_t negative_points = 0;
  bool clipped = false;
};

struct DeconvolutionOptions
{
  /// Set negative values to 0 and rescale to unit mass (trapezoid rule).
  bool clip_and_renormalize = false;
};

/// Berkson estimator: Fejer weights times lambda(l).
DeconvolutionEstimate berkson_estimate(const AngleSample& sample,
                                       FejerOrder m,
                                       const ErrorModel& err,
                                       std::span<const double> grid,
                                       DeconvolutionOptions options = {});

/// Classical-error estimator: Fejer weights divided by lambda(l). Throws
/// InfeasibleDeconvolution when |lambda(l)| < 1e-10 for some l <= m.
DeconvolutionEstimate classical_estimate(const AngleSample& sample,
                                         FejerOrder m,
                                         const ErrorModel& err,
                                         std::span<const double> grid,
                                         DeconvolutionOptions options = {});

/// Coefficients of the density of X + eps: (a_k lambda(k), b_k lambda(k)).
FourierCoeffs convolve_model(const FourierCoeffs& coeffs, const ErrorModel& err);

/// Coefficient weights used by the two estimators, k = 1..m.
std::vector<double> berkson_weights(FejerOrder m, const ErrorModel& err);
std::vector<double> classical_weights(FejerOrder m, const ErrorModel& err);

} // namespace fejer
