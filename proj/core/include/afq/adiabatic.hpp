#pragma once

// Adiabatic (pure dephasing) decoherence of a register nuclear spin from the
// dipolar fields of randomly placed impurity nuclear spins.
//
// Under the rigid-lattice condition the frequency-modulation correlation
// function is constant over T_D, and 1/T_D^2 ~ <dw^2> with
//
//   <dw^2> = C_imp (mu0/4pi gamma_I gamma_imp hbar)^2 (16 pi / 15 a^3)
//            (1 - tanh^2(gamma_imp B hbar / 2 k T_I)) / 4
//
// The mean frequency shift <gamma_I B(t)> produced by the impurity
// polarization has no closed form here and is not computed.

namespace afq::adiabatic {

namespace constants {
inline constexpr double kMu0Over4Pi = 1.00000000055e-7;  // T m / A
inline constexpr double kHbar = 1.054571817e-34;         // J s
inline constexpr double kBoltzmann = 1.380649e-23;       // J / K
}  // namespace constants

/// Parameters without the concentration. All fields must be > 0.
struct ImpuritySpec {
  double gamma_I = 0.0;    ///< register gyromagnetic ratio, rad/(s T)
  double gamma_imp = 0.0;  ///< impurity gyromagnetic ratio, rad/(s T)
  double B = 0.0;          ///< field, T
  double T_I = 0.0;        ///< impurity nuclear spin temperature, K
  double a_min = 0.0;      ///< minimal qubit-impurity distance, m
};

struct ImpurityParams {
  ImpuritySpec spec;
  double C_imp = 0.0;  ///< impurity concentration, 1/m^3 (>= 0)
};

/// Throws afq::Error(kImpurityParameterNotPositive) on invalid fields.
void validate(const ImpuritySpec& spec);
void validate(const ImpurityParams& params);

/// |gamma_imp| B hbar / (2 k_B T_I).
double polarization_argument(const ImpuritySpec& spec);

/// <I_z^2> - <I_z>^2 = (1 - tanh^2(x)) / 4, in (0, 1/4].
double polarization_variance(const ImpuritySpec& spec);

/// Angular prefactor of the mean-square modulation (16 pi / 15).
inline constexpr double kGeometricPrefactor = 16.0 * 3.14159265358979323846 / 15.0;

/// <dw^2> per unit concentration, rad^2 m^3 / s^2.
double modulation_per_concentration(const ImpuritySpec& spec);

/// <dw^2> in rad^2/s^2; linear in C_imp.
double mean_square_modulation(const ImpurityParams& params);

/// Concentration (1/m^3) at which <dw^2> = 1 / target_T_D^2.
double allowable_concentration(const ImpuritySpec& spec, double target_T_D);

/// 1 / a_min^3, the default site density for percent conversions.
double default_site_density(const ImpuritySpec& spec);

/// 100 * concentration / site_density.
double concentration_percent(double concentration, double site_density);

/// True when T_parallel_imp >= 100 T_D, the regime in which the correlation
/// decay factor exp(-t / T_parallel_imp) is taken as 1.
bool rigid_lattice_holds(double T_parallel_imp, double T_D);

}  // namespace afq::adiabatic
