#pragma once

// Dimensionless antiferromagnet / register parameters shared by every rate
// computation, plus the magnon dispersion and unit conversions.
//
// Fields are dimensionless except omega_E, which is in rad/s. The critical
// field b_C is measured in units of the exchange field (B_C / B_E), which for
// FeCO3 (B_E ~ 35 T, B_C ~ 15.5 T) gives b_C ~ 0.44.

#include <cstdint>

namespace afq {

class ModelParams {
 public:
  struct Fields {
    double b_C = 0.5;
    double s = 1e-5;
    double a = 1e-3;
    double g = 1e-5;
    double omega_E = 6.283185307179586e11;
    double gamma_ratio = 1e-3;
  };

  /// Largest accepted damping; the rate formulas assume s << 1.
  static constexpr double kMaxDamping = 1e-2;

  /// Validates every invariant; throws afq::Error with a distinct ErrorCode
  /// for each violation.
  explicit ModelParams(const Fields& f);

  /// b_C^2 = 1/4, s = 1e-5, a^2 = 1e-6, g = 1e-5, omega_E = 2 pi 1e11 rad/s.
  static ModelParams figure_defaults();

  double b_C() const noexcept { return f_.b_C; }
  double s() const noexcept { return f_.s; }
  double a() const noexcept { return f_.a; }
  double g() const noexcept { return f_.g; }
  double omega_E() const noexcept { return f_.omega_E; }
  double gamma_ratio() const noexcept { return f_.gamma_ratio; }
  const Fields& fields() const noexcept { return f_; }

  /// Upper limit of the xi integration, sqrt(b_C^2 + pi^2/12) - b_C.
  double xi_max() const noexcept { return xi_max_; }
  /// sqrt(1 + b_C^2) + b_C, the xi-independent part of the rate weight.
  double weight_offset() const noexcept { return weight_offset_; }

  /// Rate prefactor 3 a^2 / (2 pi).
  double rate_prefactor() const noexcept;

  friend bool operator==(const ModelParams& x, const ModelParams& y) noexcept {
    return x.f_.b_C == y.f_.b_C && x.f_.s == y.f_.s && x.f_.a == y.f_.a &&
           x.f_.g == y.f_.g && x.f_.omega_E == y.f_.omega_E &&
           x.f_.gamma_ratio == y.f_.gamma_ratio;
  }

 private:
  Fields f_;
  double xi_max_;
  double weight_offset_;
};

/// A register qubit at lattice site k with detuning delta_b = b_C - b - g k
/// from the spin-flop turning point.
class QubitSite {
 public:
  /// Requires |delta_b| < b_C and site_index >= 0.
  static QubitSite create(const ModelParams& p, double delta_b,
                          std::int64_t site_index = 0);
  /// Builds the site from the uniform field part b and the index k.
  static QubitSite from_field(const ModelParams& p, double b,
                              std::int64_t site_index);

  double delta_b() const noexcept { return delta_b_; }
  std::int64_t site_index() const noexcept { return site_index_; }

 private:
  QubitSite(double delta_b, std::int64_t k) : delta_b_(delta_b), site_index_(k) {}
  double delta_b_;
  std::int64_t site_index_;
};

/// Qubit pair (k, l) with separation l - k.
class PairConfig {
 public:
  /// Requires separation >= 1.
  PairConfig(QubitSite site, std::int64_t separation);

  /// Like the constructor but also accepts separation 0, where J0(0) = 1
  /// reduces the pair kernel to the single-qubit one. Test use only.
  static PairConfig allow_zero(QubitSite site, std::int64_t separation);

  const QubitSite& site() const noexcept { return site_; }
  std::int64_t separation() const noexcept { return separation_; }

 private:
  struct Unchecked {};
  PairConfig(QubitSite site, std::int64_t separation, Unchecked)
      : site_(site), separation_(separation) {}
  QubitSite site_;
  std::int64_t separation_;
};

/// sqrt(b_C^2 + pi^2/12) - b_C; throws DomainError for b_C <= 0.
double xi_max(double b_C);

/// Lower magnon branch gap E(q) ~ sqrt(b_C^2 + q^2/12), q in [0, pi].
double magnon_dispersion(double q_perp, double b_C);

/// omega_E * 3 a^2 / (2 pi) * dimensionless_rate, in 1/s.
double physical_rate(double dimensionless_rate, const ModelParams& p);

}  // namespace afq
