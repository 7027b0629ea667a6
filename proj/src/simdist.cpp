#include "fejer/simdist.hpp"

#include "fejer/angles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fejer {

namespace {

constexpr int kMaxTruncation = 4096;
constexpr double kCoefficientFloor = 1e-14;

std::string format_number(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string format_location(double mu)
{
  struct Named
  {
    double value;
    const char* text;
  };
  static constexpr Named named[] = {
    { 0.0, "0" },           { kPi / 2, "pi/2" },   { -kPi / 2, "-pi/2" },
    { -kPi, "pi" },         { kPi / 4, "pi/4" },   { -kPi / 4, "-pi/4" },
    { 3 * kPi / 4, "3pi/4" }, { -3 * kPi / 4, "-3pi/4" },
  };
  for (const auto& n : named)
    if (std::abs(mu - n.value) < 1e-12)
      return n.text;
  return format_number(mu);
}

std::vector<double> truncate_moduli(std::vector<double> moduli)
{
  std::size_t keep = moduli.size();
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    if (std::abs(moduli[k]) < kCoefficientFloor) {
      keep = k + 1;
      break;
    }
  }
  moduli.resize(std::max<std::size_t>(keep, 1));
  return moduli;
}

double arc_from_origin(double theta, double origin)
{
  double arc = theta - origin;
  if (arc < 0.0 || arc > kTwoPi)
    arc = wrap_positive(arc);
  return arc;
}

} // namespace

double bessel_i0_scaled(double kappa)
{
  if (kappa < 0.0)
    throw std::domain_error("bessel_i0_scaled: kappa must be nonnegative");
  if (kappa < 500.0)
    return std::cyl_bessel_i(0.0, kappa) * std::exp(-kappa);
  const double t = 1.0 / (8.0 * kappa);
  // asymptotic series with coefficients ((2j-1)!!)^2 / j! in powers of 1/(8 kappa)
  const double series = 1.0 + t * (1.0 + t * (4.5 + t * (37.5 + t * 459.375)));
  return series / std::sqrt(kTwoPi * kappa);
}

std::vector<double> bessel_ratios(double kappa, int order)
{
  if (kappa < 0.0)
    throw std::domain_error("bessel_ratios: kappa must be nonnegative");
  std::vector<double> out(std::max(order, 0), 0.0);
  if (order <= 0 || kappa == 0.0)
    return out;
  if (kappa > 1e5) {
    for (int k = 1; k <= order; ++k)
      out[k - 1] = std::exp(-0.5 * k * k / kappa);
    return out;
  }
  // Miller's backward recurrence for r_j = I_j / I_{j-1}
  const int top = std::max(order, static_cast<int>(std::ceil(kappa))) + 64;
  std::vector<double> r(order);
  double ratio = 0.0;
  for (int j = top; j >= 1; --j) {
    ratio = 1.0 / (2.0 * j / kappa + ratio);
    if (j <= order)
      r[j - 1] = ratio;
  }
  double prod = 1.0;
  for (int k = 0; k < order; ++k) {
    prod *= r[k];
    out[k] = prod;
  }
  return out;
}

double mean_resultant_vm(double kappa)
{
  if (kappa > 1e5)
    return 1.0 - 0.5 / kappa - 0.125 / (kappa * kappa);
  return bessel_ratios(kappa, 1)[0];
}

double inverse_mean_resultant_vm(double rbar)
{
  if (!(rbar >= 0.0) || rbar >= 1.0)
    throw std::domain_error("inverse_mean_resultant_vm: rbar must lie in [0, 1)");
  if (rbar == 0.0)
    return 0.0;
  double kappa = rbar * (2.0 - rbar * rbar) / (1.0 - rbar * rbar);
  for (int it = 0; it < 100; ++it) {
    const double a = mean_resultant_vm(kappa);
    const double slope = 1.0 - a / kappa - a * a;
    if (!(slope > 0.0))
      break;
    double next = kappa - (a - rbar) / slope;
    if (next <= 0.0)
      next = 0.5 * kappa;
    const double step = std::abs(next - kappa);
    kappa = next;
    if (step <= 1e-14 * kappa)
      break;
  }
  return kappa;
}

double draw_von_mises(double mu, double kappa, RngStream& rng)
{
  if (kappa < 1e-8)
    return -kPi + kTwoPi * rng.uniform();
  // Best and Fisher (1979) wrapped-Cauchy envelope
  const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
  const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
  const double r = (1.0 + rho * rho) / (2.0 * rho);
  double f;
  for (;;) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform_open();
    const double z = std::cos(kPi * u1);
    f = (1.0 + r * z) / (r + z);
    const double c = kappa * (r - f);
    if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0)
      break;
  }
  f = std::clamp(f, -1.0, 1.0);
  const double offset = rng.uniform() < 0.5 ? -std::acos(f) : std::acos(f);
  return wrap_angle(mu + offset);
}

CircularModel CircularModel::von_mises(double mu, double kappa)
{
  if (!std::isfinite(mu) || !(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("von_mises: need finite mu and kappa >= 0");
  CircularModel m;
  m.kind_ = ModelKind::VonMises;
  m.mu_ = wrap_angle(mu);
  m.param_ = kappa;
  m.modulus_ = truncate_moduli(bessel_ratios(kappa, kMaxTruncation));
  return m;
}

CircularModel CircularModel::wrapped_normal(double mu, double rho)
{
  if (!std::isfinite(mu) || !(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("wrapped_normal: need finite mu and rho in [0, 1)");
  CircularModel m;
  m.kind_ = ModelKind::WrappedNormal;
  m.mu_ = wrap_angle(mu);
  m.param_ = rho;
  std::vector<double> mod(kMaxTruncation, 0.0);
  if (rho > 0.0) {
    const double lr = std::log(rho);
    for (int k = 1; k <= kMaxTruncation; ++k) {
      mod[k - 1] = std::exp(static_cast<double>(k) * k * lr);
      if (mod[k - 1] < kCoefficientFloor)
        break;
    }
  }
  m.modulus_ = truncate_moduli(std::move(mod));
  return m;
}

CircularModel CircularModel::wrapped_cauchy(double mu, double rho)
{
  if (!std::isfinite(mu) || !(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("wrapped_cauchy: need finite mu and rho in [0, 1)");
  CircularModel m;
  m.kind_ = ModelKind::WrappedCauchy;
  m.mu_ = wrap_angle(mu);
  m.param_ = rho;
  std::vector<double> mod(kMaxTruncation, 0.0);
  double p = 1.0;
  for (int k = 1; k <= kMaxTruncation; ++k) {
    p *= rho;
    mod[k - 1] = p;
    if (p < kCoefficientFloor)
      break;
  }
  m.modulus_ = truncate_moduli(std::move(mod));
  return m;
}

CircularModel CircularModel::uniform()
{
  CircularModel m;
  m.kind_ = ModelKind::Uniform;
  m.modulus_ = { 0.0 };
  return m;
}

CircularModel CircularModel::mixture(const CircularModel& first, const CircularModel& second, double p)
{
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("mixture: weight must lie in [0, 1]");
  CircularModel m;
  m.kind_ = ModelKind::Mixture;
  m.p_ = p;
  m.first_ = std::make_shared<const CircularModel>(first);
  m.second_ = std::make_shared<const CircularModel>(second);
  return m;
}

int CircularModel::truncation() const
{
  if (kind_ == ModelKind::Mixture)
    return std::max(first_->truncation(), second_->truncation());
  return static_cast<int>(modulus_.size());
}

double CircularModel::coefficient_modulus(int k) const
{
  if (k == 0)
    return 1.0;
  k = std::abs(k);
  if (kind_ == ModelKind::Mixture) {
    const auto c = fourier_coeffs(k);
    return std::hypot(c.a[k - 1], c.b[k - 1]);
  }
  return k <= static_cast<int>(modulus_.size()) ? modulus_[k - 1] : 0.0;
}

FourierCoeffs CircularModel::fourier_coeffs(int order) const
{
  FourierCoeffs c;
  c.a.assign(std::max(order, 0), 0.0);
  c.b.assign(std::max(order, 0), 0.0);
  if (kind_ == ModelKind::Mixture) {
    const auto c1 = first_->fourier_coeffs(order);
    const auto c2 = second_->fourier_coeffs(order);
    for (int k = 0; k < order; ++k) {
      c.a[k] = p_ * c1.a[k] + (1.0 - p_) * c2.a[k];
      c.b[k] = p_ * c1.b[k] + (1.0 - p_) * c2.b[k];
    }
    return c;
  }
  const int limit = std::min(order, static_cast<int>(modulus_.size()));
  for (int k = 1; k <= limit; ++k) {
    c.a[k - 1] = modulus_[k - 1] * std::cos(k * mu_);
    c.b[k - 1] = modulus_[k - 1] * std::sin(k * mu_);
  }
  return c;
}

double CircularModel::density(double theta) const
{
  switch (kind_) {
    case ModelKind::Uniform:
      return 1.0 / kTwoPi;
    case ModelKind::VonMises:
      return std::exp(param_ * (std::cos(theta - mu_) - 1.0)) / (kTwoPi * bessel_i0_scaled(param_));
    case ModelKind::WrappedCauchy: {
      const double r = param_;
      return (1.0 - r * r) / (kTwoPi * (1.0 + r * r - 2.0 * r * std::cos(theta - mu_)));
    }
    case ModelKind::WrappedNormal: {
      double acc = 0.0;
      const double t = theta - mu_;
      for (std::size_t k = 0; k < modulus_.size(); ++k)
        acc += modulus_[k] * std::cos((k + 1.0) * t);
      return std::max(0.0, (1.0 + 2.0 * acc) / kTwoPi);
    }
    case ModelKind::Mixture:
      return p_ * first_->density(theta) + (1.0 - p_) * second_->density(theta);
  }
  return 0.0;
}

double CircularModel::cdf(double theta, double origin) const
{
  return fourier_cdf(fourier_coeffs(truncation()), theta, origin);
}

double CircularModel::draw(RngStream& rng) const
{
  switch (kind_) {
    case ModelKind::Uniform:
      return -kPi + kTwoPi * rng.uniform();
    case ModelKind::VonMises:
      return draw_von_mises(mu_, param_, rng);
    case ModelKind::WrappedNormal: {
      if (param_ == 0.0)
        return -kPi + kTwoPi * rng.uniform();
      const double sigma = std::sqrt(-2.0 * std::log(param_));
      return wrap_angle(mu_ + sigma * rng.normal());
    }
    case ModelKind::WrappedCauchy: {
      if (param_ == 0.0)
        return -kPi + kTwoPi * rng.uniform();
      const double scale = -std::log(param_);
      return wrap_angle(mu_ + scale * std::tan(kPi * (rng.uniform_open() - 0.5)));
    }
    case ModelKind::Mixture:
      if (p_ == 1.0)
        return first_->draw(rng);
      if (p_ == 0.0)
        return second_->draw(rng);
      return rng.uniform() < p_ ? first_->draw(rng) : second_->draw(rng);
  }
  return 0.0;
}

std::vector<double> CircularModel::draw(std::size_t n, RngStream& rng) const
{
  std::vector<double> out(n);
  for (auto& x : out)
    x = draw(rng);
  return out;
}

AngleSample CircularModel::sample(std::size_t n, RngStream& rng) const
{
  if (n == 0)
    throw std::invalid_argument("sample: n must be >= 1");
  return AngleSample(draw(n, rng));
}

std::string CircularModel::label() const
{
  switch (kind_) {
    case ModelKind::Uniform:
      return "U";
    case ModelKind::VonMises:
      return "VM(" + format_location(mu_) + "," + format_number(param_) + ")";
    case ModelKind::WrappedNormal:
      return "WN(" + format_location(mu_) + "," + format_number(param_) + ")";
    case ModelKind::WrappedCauchy:
      return "WC(" + format_location(mu_) + "," + format_number(param_) + ")";
    case ModelKind::Mixture:
      return "Mix(" + first_->label() + "," + second_->label() + "," + format_number(p_) + ")";
  }
  return {};
}

double fourier_density(const FourierCoeffs& coeffs, double theta)
{
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double c = 1.0;
  double s = 0.0;
  double acc = 0.0;
  for (int k = 0; k < coeffs.order(); ++k) {
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
    acc += coeffs.a[k] * c + coeffs.b[k] * s;
  }
  return (1.0 + 2.0 * acc) / kTwoPi;
}

namespace {

double conjugate_series(const FourierCoeffs& coeffs, double t)
{
  const double c1 = std::cos(t);
  const double s1 = std::sin(t);
  double c = 1.0;
  double s = 0.0;
  double acc = 0.0;
  for (int k = 1; k <= coeffs.order(); ++k) {
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
    acc += (coeffs.a[k - 1] * s - coeffs.b[k - 1] * c) / k;
  }
  return acc;
}

} // namespace

double fourier_cdf(const FourierCoeffs& coeffs, double theta, double origin)
{
  const double arc = arc_from_origin(theta, origin);
  if (arc == 0.0)
    return 0.0;
  if (arc == kTwoPi)
    return 1.0;
  const double v =
    arc / kTwoPi + (conjugate_series(coeffs, origin + arc) - conjugate_series(coeffs, origin)) / kPi;
  return std::clamp(v, 0.0, 1.0);
}

double theta1(const FourierCoeffs& coeffs)
{
  double acc = 0.0;
  for (int k = 1; k <= coeffs.order(); ++k) {
    const double a = coeffs.a[k - 1];
    const double b = coeffs.b[k - 1];
    acc += static_cast<double>(k) * k * (a * a + b * b);
  }
  return acc / kPi;
}

double theta1(const CircularModel& model)
{
  return theta1(model.fourier_coeffs(model.truncation()));
}

double theta2(const FourierCoeffs& coeffs, double origin)
{
  double energy = 0.0;
  double shift = 0.0;
  for (int k = 1; k <= coeffs.order(); ++k) {
    const double a = coeffs.a[k - 1];
    const double b = coeffs.b[k - 1];
    energy += a * a + b * b;
    shift += -a * std::sin(k * origin) + b * std::cos(k * origin);
  }
  return energy / kPi + 2.0 / kPi * shift * shift;
}

double theta2(const CircularModel& model, double origin)
{
  return theta2(model.fourier_coeffs(model.truncation()), origin);
}

double isb_exact(const CircularModel& model, FejerOrder m)
{
  const int order = std::max(model.truncation(), m.value());
  const auto c = model.fourier_coeffs(order);
  double acc = 0.0;
  for (int k = 1; k <= order; ++k) {
    const double bias = 1.0 - m.weight(k);
    acc += bias * bias * (c.a[k - 1] * c.a[k - 1] + c.b[k - 1] * c.b[k - 1]);
  }
  return acc / kPi;
}

double mise_exact_density(const CircularModel& model, FejerOrder m, std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("mise_exact_density: n must be >= 1");
  const auto c = model.fourier_coeffs(m.value());
  double var = 0.0;
  for (int k = 1; k <= m.value(); ++k) {
    const double g = m.weight(k);
    var += g * g * (1.0 - (c.a[k - 1] * c.a[k - 1] + c.b[k - 1] * c.b[k - 1]));
  }
  return isb_exact(model, m) + var / (kPi * static_cast<double>(n));
}

double cdf_variance_functional(const CircularModel& model, double origin, int points)
{
  const auto c = model.fourier_coeffs(model.truncation());
  return simpson(
    [&](double t) {
      if (t >= origin + kTwoPi)
        return 0.0;
      const double f = fourier_cdf(c, t, origin);
      return f * (1.0 - f);
    },
    origin,
    origin + kTwoPi,
    points);
}

void require_uniform_grid(std::span<const double> grid)
{
  if (grid.empty())
    throw std::invalid_argument("grid is empty");
  const double h = kTwoPi / static_cast<double>(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double expected = grid[0] + h * static_cast<double>(i);
    if (std::abs(grid[i] - expected) > 1e-9 * (1.0 + std::abs(expected)))
      throw std::invalid_argument("grid is not a uniform full-period grid");
  }
}

double ise(const EstimateGrid& estimate, std::span<const double> truth)
{
  require_uniform_grid(estimate.theta);
  if (truth.size() != estimate.values.size())
    throw std::invalid_argument("ise: truth and estimate differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = estimate.values[i] - truth[i];
    acc += d * d;
  }
  return acc * kTwoPi / static_cast<double>(truth.size());
}

double ise(const EstimateGrid& estimate, const CircularModel& model)
{
  std::vector<double> truth(estimate.theta.size());
  if (estimate.kind == EstimateKind::Density) {
    for (std::size_t i = 0; i < truth.size(); ++i)
      truth[i] = model.density(estimate.theta[i]);
  } else {
    const auto c = model.fourier_coeffs(model.truncation());
    for (std::size_t i = 0; i < truth.size(); ++i)
      truth[i] = fourier_cdf(c, estimate.theta[i], estimate.origin);
  }
  return ise(estimate, truth);
}

void MiseAccumulator::add(double value)
{
  ++count_;
  const double delta = value - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (value - mean_);
}

double MiseAccumulator::standard_error() const
{
  if (count_ < 2)
    return 0.0;
  const double var = m2_ / static_cast<double>(count_ - 1);
  return std::sqrt(var / static_cast<double>(count_));
}

} // namespace fejer
