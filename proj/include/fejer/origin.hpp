#pragma once

#include "fejer/estimators.hpp"

#include <vector>

namespace fejer {

/// Arc from `start` counter-clockwise to `end`; end may exceed pi.
struct Arc
{
  double start = 0.0;
  double end = 0.0;

  double width() const noexcept { return end - start; }
};

struct OriginResult
{
  double theta0 = 0.0;        ///< circular midpoint of minimizing_arc, in [-pi, pi)
  double criterion_min = 0.0;
  double criterion_max = 0.0;
  Arc minimizing_arc;
  std::vector<Arc> minimizing_arcs; ///< every gap attaining the minimum, in scan order
};

/// C_n(theta0) = sum_{i<n} P_i (1 - P_i) (x_(i+1) - x_(i)) with the sample laid
/// out on [theta0, theta0 + 2pi) and P_i the cumulative weight fraction.
double criterion_cn(const AngleSample& sample, double theta0);

/// Minimizes C_n exactly. C_n is constant between neighbouring observations,
/// so each gap is scored once. Ties (relative 1e-12) go to the widest gap,
/// then to the smallest midpoint in [-pi, pi).
OriginResult select_origin(const AngleSample& sample);

} // namespace fejer
