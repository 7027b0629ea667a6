#pragma once

#include "fejer/estimators.hpp"
#include "fejer/kernelmath.hpp"
#include "fejer/simdist.hpp"

#include <cstddef>

namespace fejer {

/// Maximum-likelihood von Mises fit.
struct VonMisesFit
{
  double mu = 0.0;
  double kappa = 0.0;
  double rbar = 0.0; ///< (weighted) mean resultant length
};

/// Fits mu by the mean direction and kappa by solving A(kappa) = rbar.
/// Throws DegenerateSample for n < 2 or rbar >= 1 - 1e-12.
VonMisesFit fit_von_mises(const AngleSample& sample);

enum class Theta1Method
{
  ParametricVonMises,
  NonparametricBiased,
  NonparametricUnbiased
};

/// Estimate of theta_1(f) = int f'^2.
struct Theta1Estimate
{
  double value = 0.0;
  Theta1Method method = Theta1Method::ParametricVonMises;
  int M_used = 0;          ///< truncation, nonparametric only
  double kappa_hat = 0.0;  ///< parametric only
  double mu_hat = 0.0;     ///< parametric only
  bool clamped = false;    ///< unbiased total was negative and set to 0
};

/// theta_1 of the ML von Mises fit, by 4096-interval Simpson quadrature of f'^2.
Theta1Estimate theta1_parametric_vm(const AngleSample& sample);

/// round(2 n^{1/4}), at least 1.
int default_moment_order(std::size_t n);

/// (1/pi) sum_{k<=M} k^2 (a_k^2 + b_k^2) with sample moments, or with the
/// unbiased estimates of a_k^2 + b_k^2 when `unbiased` is set.
Theta1Estimate theta1_nonparametric(const AngleSample& sample, int M, bool unbiased = false);

enum class BandwidthTarget
{
  Density,
  Cdf,
  ClassicalWL
};

struct BandwidthResult
{
  FejerOrder m{ 1 };
  BandwidthTarget target = BandwidthTarget::Density;
  double theta_estimate = 0.0; ///< theta_1 or theta_2 used
  double m_real = 1.0;         ///< optimum before rounding
  double c = 0.0;              ///< CDF constant pi theta_2 / (1 + 2 pi F'(theta0))
  double w0_argument = 0.0;    ///< c n / e
  double rho = 0.0;            ///< wrapped Laplace parameter, ClassicalWL only
  double kappa_hat = 0.0;      ///< parametric fits
  bool degenerate = false;     ///< flat target (c = 0 or theta_1 = 0): m = 1
};

/// Nearest integer, floored at 1.
FejerOrder round_order(double m_real);

/// m = (6 pi theta_1)^{1/3} n^{1/3}.
BandwidthResult m_opt_density(double theta1, std::size_t n);
BandwidthResult m_opt_density(const Theta1Estimate& theta1, std::size_t n);

/// m = c n / W_0(c n / e), which exceeds e for every c n > 0. A flat fit
/// (c = 0) gives m = 1 with the degenerate flag.
BandwidthResult m_opt_cdf_from_constant(double c, double n);

/// Solves for the CDF order given theta_2(F, theta0) and F'(theta0).
BandwidthResult m_opt_cdf_from_functionals(double theta2, double density_at_origin, double n);

/// Parametric CDF order: von Mises fit, theta_2 from its first 512
/// coefficients, F'(theta0) from the fitted density. n is the total weight.
BandwidthResult m_opt_cdf(const AngleSample& sample, double origin);

/// Same rule with the true functionals of a model.
BandwidthResult m_opt_cdf(const CircularModel& model, double origin, double n);

/// Classical deconvolution with wrapped Laplace error:
/// m = (42 pi theta_1 n / rho^4)^{1/7}.
BandwidthResult m_opt_classical_wl(double theta1, std::size_t n, double rho);
BandwidthResult m_opt_classical_wl(const Theta1Estimate& theta1, std::size_t n, double rho);

} // namespace fejer
