#pragma once

#include <cstdint>

namespace fejer {

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta4 = 1.0823232337111381915;
} // namespace constants

/// Order m >= 1 of a Fejer kernel. Plays the role of an inverse bandwidth.
class FejerOrder
{
public:
  explicit FejerOrder(int m);

  int value() const noexcept { return m_; }

  /// Cesaro weight 1 - k/(m+1) for 0 <= k <= m, zero beyond.
  double weight(int k) const noexcept
  {
    if (k < 0)
      k = -k;
    return k > m_ ? 0.0 : 1.0 - static_cast<double>(k) / (m_ + 1.0);
  }

  friend bool operator==(FejerOrder, FejerOrder) = default;

private:
  int m_;
};

/// Fejer kernel K_m(s), 2pi-periodic. Uses the squared-sine closed form away
/// from s = 0 and the cosine series when |sin(s/2)| < 1e-6.
double fejer_kernel(FejerOrder m, double s);

/// K_m(s) = 1/(2pi) + (1/pi) sum_k (1 - k/(m+1)) cos(ks), evaluated term by term.
double fejer_kernel_series(FejerOrder m, double s);

/// Integrated kernel W_m(theta) = int_{-pi}^{theta} K_m(y) dy on [-pi, pi].
/// Arguments outside the interval are reduced mod 2pi first; W_m(pi) = 1.
double integrated_kernel(FejerOrder m, double theta);

/// Same series as integrated_kernel but without argument reduction, i.e.
/// the continuous antiderivative with W(t + 2pi) = W(t) + 1.
double integrated_kernel_unwrapped(FejerOrder m, double t);

struct KernelMoments
{
  double alpha;  ///< int K_m^2
  double beta;   ///< int y^2 K_m
  double gamma3; ///< int |y|^3 K_m
  double m4;     ///< int y^4 K_m
  double nu1;    ///< 2pi int y W_m K_m
  double nu3;    ///< int y^3 W_m K_m
};

/// Moments from their finite closed-form series. O(m) except nu3, whose
/// cross term S_{m,2} is an O(m^2) double sum.
KernelMoments kernel_moments_exact(FejerOrder m);

/// Composite Simpson integration of each defining integral over [-pi, pi]
/// with `points_per_period` intervals (rounded up to even). Requires at least
/// 64 (m+1) intervals.
KernelMoments kernel_moments_quadrature(FejerOrder m, int points_per_period);

/// Pieces of the nu3 series: nu3 = t1 + t2 + t3 + s1 + s2.
struct Nu3Terms
{
  double t1;
  double t2;
  double t3;
  double s1; ///< diagonal part of the sin x cos cross term
  double s2; ///< off-diagonal part, O(m^2)
};

Nu3Terms nu3_terms(FejerOrder m);

struct HarmonicSums
{
  double plain;       ///< H_m^l = sum 1/k^l
  double alternating; ///< Hbar_m^l = sum (-1)^{k+1}/k^l
};

/// Direct summation (smallest terms first) for m >= 1, 1 <= l <= 4.
HarmonicSums harmonic_sums(std::int64_t m, int l);

/// Principal branch W0 of the Lambert W function, z >= -1/e.
double lambert_w0(double z);

/// Composite Simpson rule on [a, b] with `intervals` subintervals (even).
template <typename F>
double simpson(F&& f, double a, double b, int intervals)
{
  if (intervals % 2 != 0)
    ++intervals;
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < intervals; ++i) {
    const double v = f(a + h * i);
    if (i % 2 == 1)
      odd += v;
    else
      even += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

} // namespace fejer
