#pragma once

#include "fejer/estimators.hpp"
#include "fejer/kernelmath.hpp"
#include "fejer/rng.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fejer {

/// Cosine and sine coefficients a_k = E cos(kX), b_k = E sin(kX) for k = 1..K.
struct FourierCoeffs
{
  std::vector<double> a;
  std::vector<double> b;

  int order() const noexcept { return static_cast<int>(a.size()); }
};

/// I_k(kappa)/I_0(kappa) for k = 1..order.
std::vector<double> bessel_ratios(double kappa, int order);

/// A(kappa) = I_1(kappa)/I_0(kappa), the von Mises mean resultant length.
double mean_resultant_vm(double kappa);

/// Solves A(kappa) = rbar for kappa >= 0 by Newton iteration.
double inverse_mean_resultant_vm(double rbar);

/// One von Mises(mu, kappa) draw by the Best-Fisher rejection sampler.
double draw_von_mises(double mu, double kappa, RngStream& rng);

/// Exponentially scaled I_0: exp(-kappa) I_0(kappa).
double bessel_i0_scaled(double kappa);

enum class ModelKind
{
  VonMises,
  WrappedNormal,
  WrappedCauchy,
  Uniform,
  Mixture
};

/// Reference distribution on the circle.
///
/// Wrapped normal and wrapped Cauchy are parameterised by their mean resultant
/// length rho in [0, 1), so that |phi_k| = rho^{k^2} and rho^k respectively.
class CircularModel
{
public:
  static CircularModel von_mises(double mu, double kappa);
  static CircularModel wrapped_normal(double mu, double rho);
  static CircularModel wrapped_cauchy(double mu, double rho);
  static CircularModel uniform();
  /// p is the weight of `first`.
  static CircularModel mixture(const CircularModel& first, const CircularModel& second, double p);

  ModelKind kind() const noexcept { return kind_; }
  double mu() const noexcept { return mu_; }
  /// kappa for von Mises, rho for wrapped normal and wrapped Cauchy.
  double concentration() const noexcept { return param_; }
  double mixing_weight() const noexcept { return p_; }

  double density(double theta) const;

  /// Distribution function along the arc from `origin`, with the same arc
  /// convention as cdf_estimate.
  double cdf(double theta, double origin) const;

  /// Exact coefficients for k = 1..order.
  FourierCoeffs fourier_coeffs(int order) const;

  /// |phi_k|, the modulus of the k-th coefficient.
  double coefficient_modulus(int k) const;

  /// Smallest K with |phi_K| < 1e-14, capped at 4096.
  int truncation() const;

  double draw(RngStream& rng) const;
  std::vector<double> draw(std::size_t n, RngStream& rng) const;
  AngleSample sample(std::size_t n, RngStream& rng) const;

  /// Short label such as "VM(0,5)" or "Mix(WN(0,0.9),WN(pi/2,0.75),0.5)".
  std::string label() const;

private:
  CircularModel() = default;

  ModelKind kind_ = ModelKind::Uniform;
  double mu_ = 0.0;
  double param_ = 0.0;
  double p_ = 1.0;
  std::vector<double> modulus_; // cached |phi_k| up to truncation, unimodal kinds
  std::shared_ptr<const CircularModel> first_;
  std::shared_ptr<const CircularModel> second_;
};

/// Density of a model given only by coefficients (1/2pi)[1 + 2 sum (a_k cos + b_k sin)].
double fourier_density(const FourierCoeffs& coeffs, double theta);

/// CDF along the arc from `origin` for a model given by coefficients.
double fourier_cdf(const FourierCoeffs& coeffs, double theta, double origin);

/// theta_1(f) = int f'^2 = (1/pi) sum k^2 (a_k^2 + b_k^2).
double theta1(const CircularModel& model);
double theta1(const FourierCoeffs& coeffs);

/// theta_2(F, theta0) = (1/pi) sum (a_k^2 + b_k^2)
///                     + (2/pi) (sum (-a_k sin k theta0 + b_k cos k theta0))^2.
double theta2(const CircularModel& model, double origin);
double theta2(const FourierCoeffs& coeffs, double origin);

/// Integrated squared bias of the Fejer estimator: (1/pi) sum (1 - gamma_k)^2 |phi_k|^2.
double isb_exact(const CircularModel& model, FejerOrder m);

/// Exact MISE of the error-free Fejer density estimator at sample size n:
/// isb_exact + (1/(pi n)) sum gamma_k^2 (1 - |phi_k|^2).
double mise_exact_density(const CircularModel& model, FejerOrder m, std::size_t n);

/// Integral of F(1 - F) along the arc from theta0, the leading CDF variance term.
double cdf_variance_functional(const CircularModel& model, double origin, int points = 2048);

/// Integrated squared error of an estimate on a uniform full-period grid.
/// Densities are compared with model.density, CDFs with model.cdf(., origin).
double ise(const EstimateGrid& estimate, const CircularModel& model);

/// Same against an explicit truth evaluated on the estimate grid.
double ise(const EstimateGrid& estimate, std::span<const double> truth);

/// Throws std::invalid_argument unless grid is theta_0 + 2 pi i / G, i = 0..G-1.
void require_uniform_grid(std::span<const double> grid);

/// Streaming mean and standard error of ISE values.
class MiseAccumulator
{
public:
  void add(double value);
  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Standard error of the mean; zero for fewer than two values.
  double standard_error() const;

private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

} // namespace fejer
