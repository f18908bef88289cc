#pragma once

// Two-qubit density matrices in the basis {|uu>, |ud>, |du>, |dd>} (first
// factor = qubit l, second = qubit k) and the Wootters concurrence.

#include <complex>

#include <Eigen/Core>

namespace afq {

using Matrix4c = Eigen::Matrix<std::complex<double>, 4, 4>;

class TwoQubitDensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  /// Validates Hermiticity, unit trace and positive semidefiniteness; throws
  /// afq::Error (kNotHermitian / kTraceNotOne / kNotPositive).
  explicit TwoQubitDensityMatrix(const Matrix4c& entries);

  /// rho = 1/4 {1 + 4 G_zz I_lz I_kz + G_pm I_l^- I_k^+ + conj(G_pm) I_l^+ I_k^-}.
  static TwoQubitDensityMatrix from_correlators(double g_zz,
                                                std::complex<double> g_pm);

  const Matrix4c& entries() const noexcept { return rho_; }

  /// G_zz = 4 Tr(I_lz I_kz rho).
  double g_zz() const;
  /// G^{+,-} = 4 Tr(I_l^+ I_k^- rho).
  std::complex<double> g_plus_minus() const;
  /// G^{-,+} = conj(G^{+,-}).
  std::complex<double> g_minus_plus() const;

 private:
  Matrix4c rho_;
};

/// |1,0><1,0| with |1,0> = (|ud> + |du>) / sqrt(2).
TwoQubitDensityMatrix bell_initial_state();

/// Full Wootters concurrence max(0, l1 - l2 - l3 - l4), with l_i the singular
/// values of sqrt(rho) (sy x sy) sqrt(rho)^*. Result in [0, 1].
double wootters_concurrence(const TwoQubitDensityMatrix& rho);

/// Closed form for the X-shaped states produced by from_correlators:
/// max(|G^{+,-}| - (1 + G_zz), 0) / 2.
double concurrence_from_correlators(double g_zz, std::complex<double> g_pm);

}  // namespace afq
