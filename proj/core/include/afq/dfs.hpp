#pragma once

// Four-spin clusters: the collective-noise DFS logical states, the XXX and
// XX0 cluster Hamiltonians and the labeled spectrum of the latter.
//
// Product basis index b3 b2 b1 b0 (spin 0 is the least significant bit); a set
// bit means spin up, so I_z |1> = +1/2 |1>.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace afq::dfs {

inline constexpr int kSpins = 4;
inline constexpr int kDim = 16;

using Matrix16c = Eigen::Matrix<std::complex<double>, kDim, kDim>;
using Vector16c = Eigen::Matrix<std::complex<double>, kDim, 1>;

class ClusterState {
 public:
  static constexpr double kNormTol = 1e-12;

  /// Throws DomainError unless the norm is 1 to kNormTol.
  explicit ClusterState(const Vector16c& amplitudes);

  const Vector16c& amplitudes() const noexcept { return v_; }

 private:
  Vector16c v_;
};

class ClusterOperator {
 public:
  static constexpr double kHermitianTol = 1e-12;

  /// Throws DomainError unless the matrix is Hermitian to kHermitianTol.
  explicit ClusterOperator(const Matrix16c& entries);

  const Matrix16c& entries() const noexcept { return m_; }

 private:
  Matrix16c m_;
};

enum class Axis { kX, kY, kZ };

/// Single-spin operator I_axis on spin `site` (0..3).
Matrix16c spin_operator(int site, Axis axis);
/// Sum over the four spins of I_axis.
Matrix16c total_spin(Axis axis);
/// (sum_k I_k)^2.
Matrix16c total_spin_squared();

/// Delta/2 sum_{k != l} I(k).I(l) = Delta/2 (J^2 - 3). Requires delta > 0.
ClusterOperator build_xxx(double delta);

/// -omega_eff sum I_z + U [ (sum I)^2 - (sum I_z)^2 ], identity term dropped.
ClusterOperator build_xx0(double omega_eff, double U);

/// (|0_L>, |1_L>), both J = 0, m_J = 0.
std::pair<ClusterState, ClusterState> logical_states();

/// |0_L><0_L| + |1_L><1_L|.
Matrix16c logical_projector();

/// One (J, m_J) multiplet of build_xx0.
///
/// m_J is quoted in the convention E = -|omega_eff| m_J + U (J(J+1) - m_J^2),
/// i.e. it is the projection on the direction favoured by the Zeeman term.
struct Level {
  int J = 0;
  int m_J = 0;
  int degeneracy = 0;
  double energy = 0.0;         ///< from dense diagonalization
  double coeff_omega = 0.0;    ///< coefficient of |omega_eff|, = -m_J
  double coeff_U = 0.0;        ///< coefficient of U, = J(J+1) - m_J^2
  double symbolic_energy = 0.0;
};

/// Multiplicity of each (J, m_J) for four spin-1/2: J = 0 x2, J = 1 x3,
/// J = 2 x1.
int j_multiplicity(int J);

/// Analytic level energy.
double analytic_energy(int J, int m_J, double omega_eff, double U);

/// All nine (J, m_J) multiplets sorted by energy (ties by J, then m_J).
/// Throws afq::Error(kDegeneracyResolution) if an eigenvector cannot be
/// assigned integer quantum numbers.
std::vector<Level> level_table(double omega_eff, double U);

/// Full 16-element spectrum of build_xx0, ascending.
std::vector<double> spectrum(double omega_eff, double U);

/// Analytic multiset of build_xx0 eigenvalues, ascending.
std::vector<double> analytic_spectrum(double omega_eff, double U);

struct DfsReport {
  double omega_eff = 0.0;
  double U = 0.0;
  double ground_energy = 0.0;
  std::vector<std::pair<int, int>> ground_labels;  ///< (J, m_J)
  int ground_degeneracy = 0;
  double doublet_energy = 0.0;  ///< J = 0 level
  double gap = 0.0;             ///< doublet_energy - ground_energy
  double expected_gap = 0.0;    ///< 2|omega_eff| - 2U
  bool gap_matches = false;     ///< |gap - expected_gap| <= 1e-10 scale
  double projector_trace = 0.0;
  /// Operator norm of (numeric J = 0 projector - logical_projector()).
  double projector_deviation = 0.0;
  std::vector<Level> levels;
};

/// Requires omega_eff != 0.
DfsReport dfs_report(double omega_eff, double U);

namespace detail {
/// build_xxx without the delta > 0 precondition.
ClusterOperator build_xxx_unchecked(double delta);
}  // namespace detail

}  // namespace afq::dfs
