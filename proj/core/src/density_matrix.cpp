#include "afq/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "afq/error.hpp"

namespace afq {
namespace {

using cplx = std::complex<double>;

// Basis index: 2 * (qubit l down) + (qubit k down).
constexpr int kUU = 0;
constexpr int kUD = 1;
constexpr int kDU = 2;
constexpr int kDD = 3;

Matrix4c spin_flip() {
  // sigma_y (x) sigma_y
  Matrix4c y = Matrix4c::Zero();
  y(kUU, kDD) = -1.0;
  y(kUD, kDU) = 1.0;
  y(kDU, kUD) = 1.0;
  y(kDD, kUU) = -1.0;
  return y;
}

}  // namespace

TwoQubitDensityMatrix::TwoQubitDensityMatrix(const Matrix4c& entries)
    : rho_(entries) {
  if (!rho_.allFinite()) {
    throw Error(ErrorCode::kNotHermitian, "density matrix has non-finite entries");
  }
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix not Hermitian (max |rho - rho^+| = " << herm << ")";
    throw Error(ErrorCode::kNotHermitian, os.str());
  }
  const double trace_dev = std::abs(rho_.trace() - cplx(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1 by " << trace_dev;
    throw Error(ErrorCode::kTraceNotOne, os.str());
  }
  const Matrix4c h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTol) {
    std::ostringstream os;
    os << "density matrix not positive semidefinite (min eigenvalue "
       << min_eig << ")";
    throw Error(ErrorCode::kNotPositive, os.str());
  }
}

TwoQubitDensityMatrix TwoQubitDensityMatrix::from_correlators(double g_zz,
                                                              cplx g_pm) {
  Matrix4c m = Matrix4c::Zero();
  m(kUU, kUU) = 1.0 + g_zz;
  m(kUD, kUD) = 1.0 - g_zz;
  m(kDU, kDU) = 1.0 - g_zz;
  m(kDD, kDD) = 1.0 + g_zz;
  // I_l^- I_k^+ maps |ud> to |du>.
  m(kDU, kUD) = g_pm;
  m(kUD, kDU) = std::conj(g_pm);
  return TwoQubitDensityMatrix(0.25 * m);
}

double TwoQubitDensityMatrix::g_zz() const {
  // I_lz I_kz = diag(1, -1, -1, 1) / 4
  const double t = rho_(kUU, kUU).real() - rho_(kUD, kUD).real() -
                   rho_(kDU, kDU).real() + rho_(kDD, kDD).real();
  return t;
}

cplx TwoQubitDensityMatrix::g_plus_minus() const {
  // Tr(I_l^+ I_k^- rho) = rho(du, ud)
  return 4.0 * rho_(kDU, kUD);
}

cplx TwoQubitDensityMatrix::g_minus_plus() const {
  return std::conj(g_plus_minus());
}

TwoQubitDensityMatrix bell_initial_state() {
  Matrix4c m = Matrix4c::Zero();
  m(kUD, kUD) = 0.5;
  m(kUD, kDU) = 0.5;
  m(kDU, kUD) = 0.5;
  m(kDU, kDU) = 0.5;
  return TwoQubitDensityMatrix(m);
}

double wootters_concurrence(const TwoQubitDensityMatrix& rho) {
  const Matrix4c h = 0.5 * (rho.entries() + rho.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h);
  Eigen::Vector4d roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c sqrt_rho =
      es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();

  // Singular values of B = sqrt(rho) Y sqrt(rho)^* are the square roots of
  // the eigenvalues of rho (Y rho^* Y). Working with B avoids taking square
  // roots of round-off-sized eigenvalues.
  const Matrix4c b = sqrt_rho * spin_flip() * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix4c> svd(b);
  const Eigen::Vector4d sv = svd.singularValues();  // descending
  const double c = sv(0) - sv(1) - sv(2) - sv(3);
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_from_correlators(double g_zz, cplx g_pm) {
  return 0.5 * std::max(std::abs(g_pm) - (1.0 + g_zz), 0.0);
}

}  // namespace afq
