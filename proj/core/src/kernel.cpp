#include "afq/kernel.hpp"

#include "afq/error.hpp"
#include "afq/model.hpp"

namespace afq {

double kernel_Y(const KernelArgs& args) {
  if (!(args.s > 0.0) || !std::isfinite(args.s)) {
    throw DomainError("kernel_Y: s must be > 0");
  }
  if (!(args.tau >= 0.0) || !std::isfinite(args.tau)) {
    throw DomainError("kernel_Y: tau must be >= 0");
  }
  if (!std::isfinite(args.delta)) {
    throw DomainError("kernel_Y: delta must be finite");
  }
  const double st = args.s * args.tau;
  return detail::kernel_Y_unchecked(args.delta, args.s, args.tau,
                                    std::exp(-st), -std::expm1(-st));
}

double weight(double xi, double b_C) {
  const double upper = xi_max(b_C);
  if (!(xi >= 0.0 && xi <= upper)) {
    throw DomainError("weight: xi outside [0, xi_max(b_C)]");
  }
  return std::sqrt(1.0 + b_C * b_C) + b_C + xi;
}

}  // namespace afq
