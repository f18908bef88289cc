#include "afq/two_qubit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "afq/error.hpp"
#include "afq/single_qubit.hpp"
#include "grid_errors.hpp"
#include "parallel.hpp"
#include "rate_integrals.hpp"

namespace afq {
namespace {

void require_tau(double tau, const char* fn) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    std::ostringstream os;
    os << fn << ": tau must be finite and >= 0 (got " << tau << ")";
    throw DomainError(os.str());
  }
}

double midpoint_detuning(const ModelParams& p, const PairConfig& pair) {
  return pair.site().delta_b() -
         0.5 * p.g() * static_cast<double>(pair.separation());
}

double partner_detuning(const ModelParams& p, const PairConfig& pair) {
  return pair.site().delta_b() - p.g() * static_cast<double>(pair.separation());
}

QubitSite partner_site(const ModelParams& p, const PairConfig& pair) {
  return QubitSite::create(p, partner_detuning(p, pair),
                           pair.site().site_index() + pair.separation());
}

}  // namespace

double correlation_rate(const ModelParams& p, const PairConfig& pair,
                        double tau) {
  require_tau(tau, "correlation_rate");
  return detail::correlation_rate_integral(p, midpoint_detuning(p, pair),
                                           pair.separation(), tau)
      .value;
}

double longitudinal_correlation_rate(const ModelParams& p,
                                     const PairConfig& pair, double tau) {
  return correlation_rate(p, pair, tau);
}

double shifted_single_rate(const ModelParams& p, const PairConfig& pair,
                           double tau) {
  return rate_quadrature(p, partner_site(p, pair), tau);
}

PairRateBreakdown total_concurrence_rate(const ModelParams& p,
                                         const PairConfig& pair, double tau) {
  PairRateBreakdown out;
  out.single_k = rate_quadrature(p, pair.site(), tau);
  out.single_l = shifted_single_rate(p, pair, tau);
  out.correlation = correlation_rate(p, pair, tau);
  out.total = out.single_l + out.single_k + out.correlation;
  return out;
}

double concurrence_damping_rate(const ModelParams& p, double total_rate) {
  return -9.0 * p.a() * p.a() / (2.0 * std::numbers::pi) * total_rate;
}

double asymptotic_correlation_rate(const ModelParams& p,
                                   const PairConfig& pair) {
  return detail::asymptotic_integral(p, midpoint_detuning(p, pair),
                                     pair.separation(), true, true)
      .value;
}

AsymptoticTotal asymptotic_total_rate(const ModelParams& p,
                                      const PairConfig& pair) {
  // Validates the partner detuning range.
  (void)partner_site(p, pair);

  const double guard = kPoleGuardInDampingUnits * p.s();
  auto needs_regularization = [&](double delta) {
    return detail::pole_distance(p, delta) < guard;
  };

  const double dk = pair.site().delta_b();
  const double dl = partner_detuning(p, pair);
  const double dm = midpoint_detuning(p, pair);

  AsymptoticTotal out;
  out.regularized_single_k = needs_regularization(dk);
  out.regularized_single_l = needs_regularization(dl);
  out.regularized_correlation = needs_regularization(dm);
  out.single_k =
      detail::asymptotic_integral(p, dk, 0, false, out.regularized_single_k)
          .value;
  out.single_l =
      detail::asymptotic_integral(p, dl, 0, false, out.regularized_single_l)
          .value;
  out.correlation = detail::asymptotic_integral(p, dm, pair.separation(), true,
                                                out.regularized_correlation)
                        .value;
  out.total = out.single_k + out.single_l + out.correlation;
  return out;
}

double concurrence_from_decrements(double gamma_l, double gamma_k,
                                   double gamma_corr) {
  const double total = gamma_l + gamma_k + gamma_corr;
  if (!(total >= 0.0) || !std::isfinite(total)) {
    std::ostringstream os;
    os << "concurrence_from_decrements: total decrement must be >= 0 (got "
       << total << ")";
    throw DomainError(os.str());
  }
  return std::max(0.5 * (3.0 * std::exp(-total) - 1.0), 0.0);
}

PairCurve pair_curve(const ModelParams& p, const PairConfig& pair,
                     std::span<const double> tau_grid) {
  validate_tau_grid(tau_grid);
  PairCurve out{{tau_grid.begin(), tau_grid.end()},
                std::vector<PairRateBreakdown>(tau_grid.size())};
  detail::parallel_for(tau_grid.size(), [&](std::size_t i) {
    detail::with_grid_index(i, tau_grid[i], [&] {
      out.rates[i] = total_concurrence_rate(p, pair, tau_grid[i]);
    });
  });
  return out;
}

std::vector<double> correlation_curve(const ModelParams& p,
                                      const PairConfig& pair,
                                      std::span<const double> tau_grid) {
  validate_tau_grid(tau_grid);
  std::vector<double> out(tau_grid.size());
  detail::parallel_for(tau_grid.size(), [&](std::size_t i) {
    detail::with_grid_index(i, tau_grid[i], [&] {
      out[i] = correlation_rate(p, pair, tau_grid[i]);
    });
  });
  return out;
}

std::vector<double> accumulate_trapezoid(std::span<const double> grid,
                                         std::span<const double> values) {
  if (grid.size() != values.size()) {
    throw DomainError("accumulate_trapezoid: grid and values differ in size");
  }
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    out[i] = out[i - 1] +
             0.5 * (grid[i] - grid[i - 1]) * (values[i] + values[i - 1]);
  }
  return out;
}

ConcurrenceSeries concurrence_series(const ModelParams& p,
                                     const PairCurve& curve) {
  validate_tau_grid(curve.tau_grid);
  if (curve.tau_grid.size() != curve.rates.size()) {
    throw DomainError("concurrence_series: grid and rates differ in size");
  }
  // R(0) = 0 exactly, so a grid that starts after 0 is extended by that point.
  std::vector<double> grid;
  std::vector<double> rl, rk, rc;
  const bool prepend = curve.tau_grid.front() > 0.0;
  if (prepend) {
    grid.push_back(0.0);
    rl.push_back(0.0);
    rk.push_back(0.0);
    rc.push_back(0.0);
  }
  for (std::size_t i = 0; i < curve.tau_grid.size(); ++i) {
    grid.push_back(curve.tau_grid[i]);
    rl.push_back(curve.rates[i].single_l);
    rk.push_back(curve.rates[i].single_k);
    rc.push_back(curve.rates[i].correlation);
  }
  const double pref = p.rate_prefactor();
  const auto gl = accumulate_trapezoid(grid, rl);
  const auto gk = accumulate_trapezoid(grid, rk);
  const auto gc = accumulate_trapezoid(grid, rc);

  ConcurrenceSeries out;
  const std::size_t offset = prepend ? 1 : 0;
  for (std::size_t i = offset; i < grid.size(); ++i) {
    const double l = pref * gl[i];
    const double k = pref * gk[i];
    const double c = pref * gc[i];
    out.tau_grid.push_back(grid[i]);
    out.decrement.push_back(l + k + c);
    out.concurrence.push_back(concurrence_from_decrements(l, k, c));
  }
  return out;
}

}  // namespace afq
