#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fejer {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [-pi, pi). The value pi itself maps to -pi.
inline double wrap_angle(double x)
{
  if (x >= -kPi && x < kPi)
    return x;
  double r = std::fmod(x + kPi, kTwoPi);
  if (r < 0.0)
    r += kTwoPi;
  r -= kPi;
  // fmod can round up to exactly pi for inputs just below a multiple of 2pi
  return r >= kPi ? -kPi : r;
}

/// Reduces an angle into [0, 2pi).
inline double wrap_positive(double x)
{
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0)
    r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

/// Signed shortest circular difference a - b, in [-pi, pi).
inline double circular_difference(double a, double b)
{
  return wrap_angle(a - b);
}

/// Uniform grid of `size` points -pi + 2*pi*i/size on [-pi, pi).
inline std::vector<double> uniform_grid(std::size_t size = 512)
{
  if (size == 0)
    throw std::invalid_argument("uniform_grid: size must be positive");
  std::vector<double> grid(size);
  const double step = kTwoPi / static_cast<double>(size);
  for (std::size_t i = 0; i < size; ++i)
    grid[i] = -kPi + step * static_cast<double>(i);
  return grid;
}

/// Circular mean direction of a set of angles, in [-pi, pi).
inline double circular_mean(std::span<const double> angles)
{
  double c = 0.0;
  double s = 0.0;
  for (double a : angles) {
    c += std::cos(a);
    s += std::sin(a);
  }
  return wrap_angle(std::atan2(s, c));
}

/// The sample has too little information for the requested operation
/// (fewer points than required, or a degenerate concentration).
class DegenerateSample : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Classical deconvolution hit a (near-)zero error Fourier coefficient.
class InfeasibleDeconvolution : public std::domain_error
{
public:
  InfeasibleDeconvolution(int order, double lambda)
    : std::domain_error("error characteristic function vanishes at order " +
                        std::to_string(order) + " (lambda = " +
                        std::to_string(lambda) + ")")
    , order_(order)
  {
  }

  int order() const noexcept { return order_; }

private:
  int order_;
};

} // namespace fejer
