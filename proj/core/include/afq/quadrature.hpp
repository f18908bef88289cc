#pragma once

// Globally adaptive 21-point Gauss-Kronrod integration over a caller-supplied
// initial partition.
//
// Rate integrands in this library carry two narrow scales at once: a
// Lorentzian of half-width s around the resonance, and sin/cos oscillations of
// period 2 pi / tau. Plain bisection from [a, b] can alias the oscillations, so
// callers seed the partition with build_partition() and let the adaptive loop
// refine from there.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

#include "afq/error.hpp"

namespace afq::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_intervals = std::size_t{1} << 23;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
};

struct SegmentEstimate {
  double value;
  double error;
};

namespace detail {

// QUADPACK qk21 abscissae and weights.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980089408, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Weights of the embedded 10-point Gauss rule at kXgk[1], kXgk[3], ... kXgk[9].
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

inline bool by_error(const Segment& x, const Segment& y) {
  if (x.error != y.error) return x.error < y.error;
  return x.a > y.a;
}

// Neumaier-compensated accumulation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

template <class F>
SegmentEstimate gauss_kronrod21(F& f, double a, double b) {
  using namespace detail;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::abs(fc) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double roundoff =
      50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
  const double error = std::max(std::abs((kronrod - gauss) * half), roundoff);
  return {value, error};
}

/// Integrates f over [breakpoints.front(), breakpoints.back()], starting from
/// the panels defined by consecutive breakpoints (which must be ascending).
/// Throws QuadratureError when max_intervals is reached first.
template <class F>
Result integrate(F&& f, std::span<const double> breakpoints,
                 const Options& opts = {}) {
  using detail::Segment;
  Result out;
  if (breakpoints.size() < 2) return out;

  std::vector<Segment> heap;
  std::vector<Segment> frozen;  // too narrow to split further
  heap.reserve(breakpoints.size() * 2);

  double total_value = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    const SegmentEstimate est = gauss_kronrod21(f, a, b);
    heap.push_back({a, b, est.value, est.error});
    total_value += est.value;
    total_error += est.error;
    out.evaluations += 21;
  }
  std::make_heap(heap.begin(), heap.end(), detail::by_error);

  auto target = [&] {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(total_value));
  };

  std::size_t iterations = 0;
  while (!heap.empty() && total_error > target()) {
    if (heap.size() + frozen.size() >= opts.max_intervals) break;
    std::pop_heap(heap.begin(), heap.end(), detail::by_error);
    const Segment worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e-14 * scale) {
      frozen.push_back(worst);
      continue;
    }
    const SegmentEstimate left = gauss_kronrod21(f, worst.a, mid);
    const SegmentEstimate right = gauss_kronrod21(f, mid, worst.b);
    out.evaluations += 42;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push_back({worst.a, mid, left.value, left.error});
    std::push_heap(heap.begin(), heap.end(), detail::by_error);
    heap.push_back({mid, worst.b, right.value, right.error});
    std::push_heap(heap.begin(), heap.end(), detail::by_error);

    // Running sums drift; resynchronise periodically.
    if (++iterations % 4096 == 0) {
      total_value = 0.0;
      total_error = 0.0;
      for (const Segment& s : heap) {
        total_value += s.value;
        total_error += s.error;
      }
      for (const Segment& s : frozen) {
        total_value += s.value;
        total_error += s.error;
      }
    }
  }

  std::vector<Segment> all = std::move(heap);
  all.insert(all.end(), frozen.begin(), frozen.end());
  std::sort(all.begin(), all.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  detail::CompensatedSum value;
  detail::CompensatedSum error;
  for (const Segment& s : all) {
    value.add(s.value);
    error.add(s.error);
  }
  out.value = value.value();
  out.abs_error = error.value();
  out.intervals = all.size();

  const double final_target =
      std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
  if (!(out.abs_error <= final_target) || !std::isfinite(out.value)) {
    std::ostringstream os;
    os << "adaptive quadrature did not converge: estimate " << out.value
       << ", error " << out.abs_error << " > target " << final_target
       << " after " << out.intervals << " intervals";
    throw QuadratureError(os.str(), out.value, out.abs_error, out.intervals);
  }
  return out;
}

struct PartitionHints {
  /// Centres of narrow features (inside or just outside [a, b]).
  std::vector<double> poles;
  /// Half-width of those features; panels are graded geometrically from it.
  double pole_width = 0.0;
  /// Oscillation period; 0 disables uniform oscillation panels.
  double period = 0.0;
  /// Additional breakpoints, used as given when inside (a, b).
  std::vector<double> extra;
  /// Cap on the number of uniform oscillation panels.
  std::size_t max_oscillation_panels = 4'000'000;
};

/// Ascending breakpoints covering [a, b] that resolve the hinted scales.
std::vector<double> build_partition(double a, double b,
                                    const PartitionHints& hints);

}  // namespace afq::quad
