#include "afq/single_qubit.hpp"

#include <cmath>
#include <sstream>

#include "afq/error.hpp"
#include "afq/specfun.hpp"
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

void require_positive_detuning(const QubitSite& site, const char* fn) {
  if (!(site.delta_b() > 0.0)) {
    std::ostringstream os;
    os << fn << ": requires delta_b > 0 (got " << site.delta_b() << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

double rate_quadrature(const ModelParams& p, const QubitSite& site,
                       double tau) {
  require_tau(tau, "rate_quadrature");
  return detail::single_rate_integral(p, site.delta_b(), tau).value;
}

double decoherence_rate(const ModelParams& p, const QubitSite& site,
                        double tau) {
  return rate_quadrature(p, site, tau);
}

double longitudinal_relaxation_rate(const ModelParams& p,
                                    const QubitSite& site, double tau) {
  return rate_quadrature(p, site, tau);
}

double rate_closed_form(const ModelParams& p, const QubitSite& site,
                        double tau) {
  const double d1 = site.delta_b();
  const double s = p.s();
  if (!(d1 > 10.0 * s)) {
    std::ostringstream os;
    os << "rate_closed_form: requires delta_b > 10 s (delta_b = " << d1
       << ", s = " << s << ")";
    throw DomainError(os.str());
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("rate_closed_form: tau must be finite and > 0");
  }

  const double xm = p.xi_max();
  const double d2 = xm + d1;
  const double w = p.weight_offset() - d1;
  const double decay = std::exp(-s * tau);

  double oscillatory = 0.0;
  double bracket = 0.0;
  double ci_diff = 0.0;
  if (decay > 0.0) {
    const double x1 = d1 * tau;
    const double x2 = d2 * tau;
    const double si1 = specfun::si(x1);
    const double si2 = specfun::si(x2);
    const double c1 = std::cos(x1);
    const double c2 = std::cos(x2);
    // int sin(x tau)/x dx over [d1, d2] is si(x2) - si(x1).
    oscillatory = (w * (si2 - si1) + (c1 - c2) / tau) * decay;
    bracket = (c1 / d1 - c2 / d2 + tau * (si1 - si2)) * decay;
    ci_diff = (specfun::ci(x1) - specfun::ci(x2)) * decay;
  }
  const double s_block = s * w * (xm / (d1 * d2) - bracket);
  const double log_block = s * (std::log(d2 / d1) + ci_diff);
  return oscillatory + s_block + log_block;
}

DecoherenceTime inverse_decoherence_time(const ModelParams& p,
                                         const QubitSite& site) {
  require_positive_detuning(site, "inverse_decoherence_time");
  const double d1 = site.delta_b();
  const double xm = p.xi_max();
  const double d2 = xm + d1;
  const double w = p.weight_offset() - d1;

  DecoherenceTime out;
  out.braced = w * xm / (d1 * d2) + std::log(d2 / d1);
  out.dimensionless_rate = p.s() * out.braced;
  out.rate_per_second = physical_rate(out.dimensionless_rate, p);
  out.seconds = 1.0 / out.rate_per_second;
  return out;
}

double frequency_shift(const ModelParams& p, const QubitSite& site) {
  require_positive_detuning(site, "frequency_shift");
  const double d1 = site.delta_b();
  const double xm = p.xi_max();
  const double w = p.weight_offset() - d1;
  return -p.rate_prefactor() * (w * std::log((xm + d1) / d1) + xm);
}

void validate_tau_grid(std::span<const double> tau_grid) {
  if (tau_grid.empty()) throw DomainError("tau grid is empty");
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    const double t = tau_grid[i];
    if (!std::isfinite(t) || t < 0.0) {
      std::ostringstream os;
      os << "tau grid: entry " << i << " is not finite and >= 0";
      throw DomainError(os.str());
    }
    if (i > 0 && !(t > tau_grid[i - 1])) {
      std::ostringstream os;
      os << "tau grid: not strictly ascending at index " << i;
      throw DomainError(os.str());
    }
  }
}

RateCurve curve(const ModelParams& p, const QubitSite& site,
                std::span<const double> tau_grid, RateMethod method) {
  validate_tau_grid(tau_grid);
  RateCurve out{{tau_grid.begin(), tau_grid.end()},
                std::vector<double>(tau_grid.size()),
                p,
                site};
  detail::parallel_for(tau_grid.size(), [&](std::size_t i) {
    detail::with_grid_index(i, tau_grid[i], [&] {
      const double tau = tau_grid[i];
      if (method == RateMethod::kClosedForm && tau > 0.0) {
        out.values[i] = rate_closed_form(p, site, tau);
      } else {
        out.values[i] = rate_quadrature(p, site, tau);
      }
    });
  });
  return out;
}

}  // namespace afq
