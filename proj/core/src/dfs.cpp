#include "afq/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "afq/error.hpp"

namespace afq::dfs {
namespace {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

constexpr double kQuantumNumberTol = 1e-6;

double hermitian_defect(const MatrixXc& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double operator_norm_hermitian(const Matrix16c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix16c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// J from J(J+1); throws if not within tolerance of an integer in [0, 2].
int j_from_casimir(double casimir) {
  const double j = 0.5 * (-1.0 + std::sqrt(std::max(1.0 + 4.0 * casimir, 0.0)));
  const double r = std::round(j);
  if (std::abs(j - r) > kQuantumNumberTol || r < 0.0 || r > 2.0) {
    std::ostringstream os;
    os << "cannot assign total spin: J(J+1) = " << casimir;
    throw Error(ErrorCode::kDegeneracyResolution, os.str());
  }
  return static_cast<int>(r);
}

int m_from_projection(double jz, int J) {
  const double r = std::round(jz);
  if (std::abs(jz - r) > kQuantumNumberTol || std::abs(r) > J) {
    std::ostringstream os;
    os << "cannot assign m_J: J_z = " << jz << " in J = " << J << " sector";
    throw Error(ErrorCode::kDegeneracyResolution, os.str());
  }
  return static_cast<int>(r);
}

struct LabeledVector {
  int cluster = 0;
  int J = 0;
  int m = 0;  // in the Zeeman-favoured convention
  double energy = 0.0;
  Vector16c v;
};

struct Diagonalization {
  Eigen::Matrix<double, kDim, 1> eigenvalues;
  std::vector<LabeledVector> vectors;
};

// Labels each eigenvector of H by (J, m_J): eigenvalues are grouped into
// clusters of width 1e-8 * spectral range, then J^2 and J_z are diagonalized
// in turn within each cluster.
Diagonalization diagonalize_labeled(double omega_eff, double U) {
  const Matrix16c h = build_xx0(omega_eff, U).entries();
  Eigen::SelfAdjointEigenSolver<Matrix16c> es(h);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::kDegeneracyResolution, "eigensolver failed");
  }
  const auto& ev = es.eigenvalues();
  const double range = ev(kDim - 1) - ev(0);
  const double scale = std::max({range, std::abs(ev(0)), std::abs(ev(kDim - 1))});
  const double tol = 1e-8 * (scale > 0.0 ? scale : 1.0);

  const Matrix16c j2 = total_spin_squared();
  const Matrix16c jz = total_spin(Axis::kZ);
  const double zeeman_sign = omega_eff < 0.0 ? -1.0 : 1.0;

  Diagonalization out;
  out.eigenvalues = ev;
  int cluster = 0;
  int begin = 0;
  while (begin < kDim) {
    int end = begin + 1;
    while (end < kDim && ev(end) - ev(end - 1) <= tol) ++end;
    const int n = end - begin;
    const MatrixXc block = es.eigenvectors().middleCols(begin, n);

    MatrixXc j2_block = block.adjoint() * j2 * block;
    j2_block = 0.5 * (j2_block + j2_block.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXc> es_j2(j2_block);
    const MatrixXc rotated = block * es_j2.eigenvectors();

    int jb = 0;
    while (jb < n) {
      const int J = j_from_casimir(es_j2.eigenvalues()(jb));
      int je = jb + 1;
      while (je < n && j_from_casimir(es_j2.eigenvalues()(je)) == J) ++je;
      const MatrixXc sub = rotated.middleCols(jb, je - jb);
      MatrixXc jz_block = sub.adjoint() * jz * sub;
      jz_block = 0.5 * (jz_block + jz_block.adjoint()).eval();
      Eigen::SelfAdjointEigenSolver<MatrixXc> es_jz(jz_block);
      const MatrixXc basis = sub * es_jz.eigenvectors();
      for (int c = 0; c < je - jb; ++c) {
        LabeledVector lv;
        lv.cluster = cluster;
        lv.J = J;
        lv.m = static_cast<int>(zeeman_sign) *
               m_from_projection(es_jz.eigenvalues()(c), J);
        lv.v = basis.col(c);
        lv.energy = (lv.v.adjoint() * h * lv.v)(0, 0).real();
        out.vectors.push_back(std::move(lv));
      }
      jb = je;
    }
    ++cluster;
    begin = end;
  }
  return out;
}

std::vector<Level> collect_levels(const Diagonalization& d, double omega_eff,
                                  double U) {
  struct Acc {
    int cluster = 0;
    int count = 0;
    double energy_sum = 0.0;
  };
  std::map<std::pair<int, int>, Acc> acc;
  for (const auto& lv : d.vectors) {
    auto [it, inserted] = acc.try_emplace({lv.J, lv.m});
    if (!inserted && it->second.cluster != lv.cluster) {
      throw Error(ErrorCode::kDegeneracyResolution,
                  "one (J, m_J) multiplet split across energy clusters");
    }
    it->second.cluster = lv.cluster;
    it->second.count += 1;
    it->second.energy_sum += lv.energy;
  }

  std::vector<std::pair<int, Level>> keyed;
  for (int J = 0; J <= 2; ++J) {
    for (int m = -J; m <= J; ++m) {
      const auto it = acc.find({J, m});
      if (it == acc.end() || it->second.count != j_multiplicity(J)) {
        std::ostringstream os;
        os << "multiplet (J = " << J << ", m_J = " << m << ") has "
           << (it == acc.end() ? 0 : it->second.count)
           << " eigenvectors, expected " << j_multiplicity(J);
        throw Error(ErrorCode::kDegeneracyResolution, os.str());
      }
      Level l;
      l.J = J;
      l.m_J = m;
      l.degeneracy = it->second.count;
      l.energy = it->second.energy_sum / it->second.count;
      l.coeff_omega = -m;
      l.coeff_U = J * (J + 1) - m * m;
      l.symbolic_energy = analytic_energy(J, m, omega_eff, U);
      keyed.emplace_back(it->second.cluster, l);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.J != y.second.J) return x.second.J < y.second.J;
    return x.second.m_J < y.second.m_J;
  });
  std::vector<Level> out;
  out.reserve(keyed.size());
  for (auto& [c, l] : keyed) out.push_back(l);
  return out;
}

}  // namespace

ClusterState::ClusterState(const Vector16c& amplitudes) : v_(amplitudes) {
  const double n = v_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "cluster state norm deviates from 1 (norm = " << n << ")";
    throw DomainError(os.str());
  }
}

ClusterOperator::ClusterOperator(const Matrix16c& entries) : m_(entries) {
  if (!m_.allFinite() || hermitian_defect(m_) > kHermitianTol) {
    throw DomainError("cluster operator is not Hermitian",
                      ErrorCode::kNotHermitian);
  }
}

Matrix16c spin_operator(int site, Axis axis) {
  if (site < 0 || site >= kSpins) {
    throw DomainError("spin_operator: site must be in [0, 3]");
  }
  Matrix16c m = Matrix16c::Zero();
  const int bit = 1 << site;
  for (int b = 0; b < kDim; ++b) {
    const bool up = (b & bit) != 0;
    switch (axis) {
      case Axis::kZ:
        m(b, b) = up ? 0.5 : -0.5;
        break;
      case Axis::kX:
        m(b ^ bit, b) = 0.5;
        break;
      case Axis::kY:
        // I_y = (I^+ - I^-) / 2i
        m(b ^ bit, b) = up ? cplx(0.0, 0.5) : cplx(0.0, -0.5);
        break;
    }
  }
  return m;
}

Matrix16c total_spin(Axis axis) {
  Matrix16c m = Matrix16c::Zero();
  for (int k = 0; k < kSpins; ++k) m += spin_operator(k, axis);
  return m;
}

Matrix16c total_spin_squared() {
  const Matrix16c x = total_spin(Axis::kX);
  const Matrix16c y = total_spin(Axis::kY);
  const Matrix16c z = total_spin(Axis::kZ);
  return x * x + y * y + z * z;
}

namespace detail {

ClusterOperator build_xxx_unchecked(double delta) {
  Matrix16c sum = Matrix16c::Zero();
  for (int k = 0; k < kSpins; ++k) {
    for (int l = 0; l < kSpins; ++l) {
      if (k == l) continue;
      for (Axis a : {Axis::kX, Axis::kY, Axis::kZ}) {
        sum += spin_operator(k, a) * spin_operator(l, a);
      }
    }
  }
  return ClusterOperator(0.5 * delta * sum);
}

}  // namespace detail

ClusterOperator build_xxx(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    std::ostringstream os;
    os << "build_xxx: coupling must be finite and > 0 (got " << delta << ")";
    throw DomainError(os.str());
  }
  return detail::build_xxx_unchecked(delta);
}

ClusterOperator build_xx0(double omega_eff, double U) {
  if (!std::isfinite(omega_eff) || !std::isfinite(U)) {
    throw DomainError("build_xx0: parameters must be finite");
  }
  const Matrix16c jz = total_spin(Axis::kZ);
  return ClusterOperator(-omega_eff * jz + U * (total_spin_squared() - jz * jz));
}

std::pair<ClusterState, ClusterState> logical_states() {
  // First pair factor occupies bits 3,2; second pair bits 1,0.
  Vector16c zero = Vector16c::Zero();
  zero(0b0101) = 0.5;
  zero(0b0110) = -0.5;
  zero(0b1001) = -0.5;
  zero(0b1010) = 0.5;

  const double r = 1.0 / std::sqrt(3.0);
  Vector16c one = Vector16c::Zero();
  one(0b1100) = r;
  one(0b0011) = r;
  for (int idx : {0b0101, 0b0110, 0b1001, 0b1010}) one(idx) = -0.5 * r;
  return {ClusterState(zero), ClusterState(one)};
}

Matrix16c logical_projector() {
  const auto [zero, one] = logical_states();
  return zero.amplitudes() * zero.amplitudes().adjoint() +
         one.amplitudes() * one.amplitudes().adjoint();
}

int j_multiplicity(int J) {
  switch (J) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 1;
    default:
      throw DomainError("j_multiplicity: J must be 0, 1 or 2");
  }
}

double analytic_energy(int J, int m_J, double omega_eff, double U) {
  if (J < 0 || J > 2 || std::abs(m_J) > J) {
    throw DomainError("analytic_energy: invalid (J, m_J)");
  }
  return -std::abs(omega_eff) * m_J + U * (J * (J + 1) - m_J * m_J);
}

std::vector<Level> level_table(double omega_eff, double U) {
  return collect_levels(diagonalize_labeled(omega_eff, U), omega_eff, U);
}

std::vector<double> spectrum(double omega_eff, double U) {
  Eigen::SelfAdjointEigenSolver<Matrix16c> es(build_xx0(omega_eff, U).entries(),
                                              Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + kDim};
}

std::vector<double> analytic_spectrum(double omega_eff, double U) {
  std::vector<double> out;
  for (int J = 0; J <= 2; ++J) {
    for (int m = -J; m <= J; ++m) {
      out.insert(out.end(), j_multiplicity(J), analytic_energy(J, m, omega_eff, U));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DfsReport dfs_report(double omega_eff, double U) {
  if (omega_eff == 0.0 || !std::isfinite(omega_eff)) {
    throw DomainError("dfs_report: omega_eff must be finite and nonzero");
  }
  const Diagonalization d = diagonalize_labeled(omega_eff, U);

  DfsReport r;
  r.omega_eff = omega_eff;
  r.U = U;
  r.levels = collect_levels(d, omega_eff, U);
  r.ground_energy = d.eigenvalues(0);
  for (const auto& lv : d.vectors) {
    if (lv.cluster != 0) break;
    std::pair<int, int> label{lv.J, lv.m};
    if (std::find(r.ground_labels.begin(), r.ground_labels.end(), label) ==
        r.ground_labels.end()) {
      r.ground_labels.push_back(label);
    }
    ++r.ground_degeneracy;
  }

  Matrix16c numeric_projector = Matrix16c::Zero();
  for (const auto& lv : d.vectors) {
    if (lv.J == 0) numeric_projector += lv.v * lv.v.adjoint();
  }
  for (const auto& l : r.levels) {
    if (l.J == 0) r.doublet_energy = l.energy;
  }
  r.gap = r.doublet_energy - r.ground_energy;
  r.expected_gap = 2.0 * std::abs(omega_eff) - 2.0 * U;
  const double scale = std::max(1.0, std::abs(omega_eff) + std::abs(U));
  r.gap_matches = std::abs(r.gap - r.expected_gap) <= 1e-10 * scale;

  const Matrix16c analytic = logical_projector();
  r.projector_trace = analytic.trace().real();
  r.projector_deviation = operator_norm_hermitian(numeric_projector - analytic);
  return r;
}

}  // namespace afq::dfs
