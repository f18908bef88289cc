#include "afq/quadrature.hpp"

#include <cmath>

namespace afq::quad {

std::vector<double> build_partition(double a, double b,
                                    const PartitionHints& hints) {
  std::vector<double> pts{a, b};
  if (!(b > a)) return {a};
  const double length = b - a;

  auto push_inside = [&](double x) {
    if (x > a && x < b) pts.push_back(x);
  };

  if (hints.pole_width > 0.0) {
    for (const double c : hints.poles) {
      push_inside(c);
      // Grade outward from the pole until both sides leave [a, b].
      for (double off = hints.pole_width; off < 4 * length + hints.pole_width;
           off *= 2.0) {
        push_inside(c - off);
        push_inside(c + off);
        if (c - off < a && c + off > b) break;
      }
    }
  }

  if (hints.period > 0.0) {
    double panels = std::ceil(length / hints.period);
    panels = std::min(panels, static_cast<double>(hints.max_oscillation_panels));
    const auto n = static_cast<std::size_t>(panels);
    pts.reserve(pts.size() + n);
    for (std::size_t i = 1; i < n; ++i) {
      pts.push_back(a + length * static_cast<double>(i) / static_cast<double>(n));
    }
  }

  for (const double x : hints.extra) push_inside(x);

  std::sort(pts.begin(), pts.end());
  // Drop near-duplicates that would create degenerate panels.
  const double min_gap = 1e-14 * std::max({std::abs(a), std::abs(b), length});
  std::vector<double> out;
  out.reserve(pts.size());
  for (const double x : pts) {
    if (out.empty() || x - out.back() > min_gap) {
      out.push_back(x);
    }
  }
  if (out.back() != b) {
    if (out.size() > 1 && b - out.back() <= min_gap) out.back() = b;
    else out.push_back(b);
  }
  return out;
}

}  // namespace afq::quad
