#include "fejer/origin.hpp"

#include "fejer/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fejer {

namespace {

struct Point
{
  double angle;
  double weight;
};

std::vector<Point> sorted_points(const AngleSample& sample, double shift)
{
  std::vector<Point> pts(sample.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    pts[i] = { sample.angles()[i], sample.weights()[i] };
  for (auto& p : pts)
    p.angle = shift + wrap_positive(p.angle - shift);
  std::stable_sort(pts.begin(), pts.end(), [](const Point& l, const Point& r) { return l.angle < r.angle; });
  return pts;
}

} // namespace

double criterion_cn(const AngleSample& sample, double theta0)
{
  if (sample.size() < 2)
    throw DegenerateSample("origin criterion needs at least two observations");
  const auto pts = sorted_points(sample, theta0);
  const double total = sample.total_weight();
  double cum = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    cum += pts[i].weight;
    const double p = cum / total;
    acc += p * (1.0 - p) * (pts[i + 1].angle - pts[i].angle);
  }
  return acc;
}

OriginResult select_origin(const AngleSample& sample)
{
  if (sample.size() < 2)
    throw DegenerateSample("origin selection needs at least two observations");

  // Observations on [-pi, pi), ascending; the sequence is doubled with +2pi
  // so that a window of n points starting at s lists the sample in the frame
  // whose origin lies in the gap just before point s.
  const auto pts = sorted_points(sample, -kPi);
  const std::size_t n = pts.size();
  const double total = sample.total_weight();

  std::vector<double> x(2 * n);
  std::vector<double> q(2 * n + 1, 0.0); // prefix sums of normalised weights
  for (std::size_t i = 0; i < 2 * n; ++i) {
    x[i] = pts[i % n].angle + (i >= n ? kTwoPi : 0.0);
    q[i + 1] = q[i] + pts[i % n].weight / total;
  }
  // For gap t (between x[t] and x[t+1]) with u = q[t+1]: running sums of g, g u, g u^2.
  std::vector<double> s0(2 * n, 0.0), s1(2 * n, 0.0), s2(2 * n, 0.0);
  for (std::size_t t = 0; t + 1 < 2 * n; ++t) {
    const double g = x[t + 1] - x[t];
    const double u = q[t + 1];
    s0[t + 1] = s0[t] + g;
    s1[t + 1] = s1[t] + g * u;
    s2[t + 1] = s2[t] + g * u * u;
  }

  struct Candidate
  {
    Arc arc;
    double midpoint;
    double value;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    // the origin sits in the gap ending at point s
    const double gap_start = s == 0 ? x[n - 1] - kTwoPi : x[s - 1];
    const double gap_end = x[s];
    const double width = gap_end - gap_start;
    if (!(width > 0.0))
      continue;
    // sum over gaps t = s .. s+n-2 of g (u - qs)(1 - u + qs)
    const double qs = q[s];
    const std::size_t lo = s;
    const std::size_t hi = s + n - 1;
    const double a0 = s0[hi] - s0[lo];
    const double a1 = s1[hi] - s1[lo];
    const double a2 = s2[hi] - s2[lo];
    const double value = std::max(0.0, a1 - qs * a0 - a2 + 2.0 * qs * a1 - qs * qs * a0);
    const double mid = wrap_angle(gap_start + 0.5 * width);
    candidates.push_back({ { gap_start, gap_end }, mid, value });
  }

  OriginResult out;
  if (candidates.empty()) {
    // every observation at one angle: a single full-circle gap
    const double a = pts[0].angle;
    out.minimizing_arc = { a, a + kTwoPi };
    out.minimizing_arcs = { out.minimizing_arc };
    out.theta0 = wrap_angle(a + kPi);
    return out;
  }

  double lo_value = candidates[0].value;
  double hi_value = candidates[0].value;
  for (const auto& c : candidates) {
    lo_value = std::min(lo_value, c.value);
    hi_value = std::max(hi_value, c.value);
  }
  const double tol = 1e-12 * std::max(hi_value, 1e-300);

  std::vector<Candidate> winners;
  for (const auto& c : candidates)
    if (c.value <= lo_value + tol)
      winners.push_back(c);
  std::sort(winners.begin(), winners.end(), [](const Candidate& l, const Candidate& r) {
    return l.midpoint < r.midpoint;
  });

  const Candidate* best = &winners[0];
  for (const auto& c : winners) {
    const double w = c.arc.width();
    const double bw = best->arc.width();
    if (w > bw * (1.0 + 1e-12))
      best = &c;
  }

  for (const auto& c : winners)
    out.minimizing_arcs.push_back(c.arc);
  out.minimizing_arc = best->arc;
  out.theta0 = best->midpoint;
  out.criterion_min = criterion_cn(sample, out.theta0);
  out.criterion_max = hi_value;
  return out;
}

} // namespace fejer
