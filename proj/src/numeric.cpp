#include "qsylv/numeric.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include "qsylv/errors.hpp"

namespace qsylv {

namespace {

using Complex = std::complex<double>;

double rank_threshold(const Eigen::VectorXd& sigma, Eigen::Index rows,
                      Eigen::Index cols, const RankPolicy& policy) {
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  return policy.rel_tol * sigma_max * static_cast<double>(std::max(rows, cols));
}

std::size_t count_above(const Eigen::VectorXd& sigma, double threshold) {
  std::size_t kept = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) ++kept;
  return kept;
}

}  // namespace

ComplexMatrix to_complex_adjoint(const QMatrix& a) {
  const auto m = static_cast<Eigen::Index>(a.rows());
  const auto n = static_cast<Eigen::Index>(a.cols());
  ComplexMatrix out(2 * m, 2 * n);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = a(static_cast<std::size_t>(r),
                              static_cast<std::size_t>(c));
      const Complex a1(q.w, q.x);
      const Complex a2(q.y, q.z);
      out(r, c) = a1;
      out(r, n + c) = a2;
      out(m + r, c) = -std::conj(a2);
      out(m + r, n + c) = std::conj(a1);
    }
  }
  return out;
}

QMatrix from_complex_adjoint(const ComplexMatrix& mat) {
  if (mat.rows() % 2 != 0 || mat.cols() % 2 != 0) {
    throw StructureViolation("adjoint extraction: dimensions " +
                             std::to_string(mat.rows()) + "x" +
                             std::to_string(mat.cols()) + " are not even");
  }
  const Eigen::Index m = mat.rows() / 2;
  const Eigen::Index n = mat.cols() / 2;

  const auto tl = mat.topLeftCorner(m, n);
  const auto tr = mat.topRightCorner(m, n);
  const auto bl = mat.bottomLeftCorner(m, n);
  const auto br = mat.bottomRightCorner(m, n);

  const double defect = std::sqrt((br - tl.conjugate()).squaredNorm() +
                                  (bl + tr.conjugate()).squaredNorm());
  const double scale = std::max(1e-300, mat.norm());
  if (defect > 1e-8 * scale) {
    throw StructureViolation("adjoint extraction: block structure defect " +
                             std::to_string(defect / scale) + " (relative)");
  }

  QMatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Complex a1 = 0.5 * (tl(r, c) + std::conj(br(r, c)));
      const Complex a2 = 0.5 * (tr(r, c) - std::conj(bl(r, c)));
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          Quaternion(a1.real(), a1.imag(), a2.real(), a2.imag());
    }
  }
  return out;
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

std::size_t complex_rank(const ComplexMatrix& m, const RankPolicy& policy) {
  const Eigen::VectorXd sigma = singular_values(m);
  return count_above(sigma, rank_threshold(sigma, m.rows(), m.cols(), policy));
}

std::size_t paired_rank(const ComplexMatrix& m, const RankPolicy& policy) {
  const Eigen::VectorXd sigma = singular_values(m);
  const std::size_t kept =
      count_above(sigma, rank_threshold(sigma, m.rows(), m.cols(), policy));
  if (kept % 2 != 0) {
    throw PairingViolation(
        "rank: " + std::to_string(kept) +
        " singular values above threshold; the pairs of the embedding "
        "straddle the tolerance, adjust rel_tol");
  }
  return kept / 2;
}

std::size_t rank(const QMatrix& a, const RankPolicy& policy) {
  if (a.empty()) return 0;
  return paired_rank(to_complex_adjoint(a), policy);
}

ComplexMatrix complex_pinv(const ComplexMatrix& m, const RankPolicy& policy) {
  if (m.rows() == 0 || m.cols() == 0)
    return ComplexMatrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU |
                                             Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double threshold = rank_threshold(sigma, m.rows(), m.cols(), policy);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) inv(i) = 1.0 / sigma(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

PinvResult pinv_full(const QMatrix& a, const RankPolicy& policy) {
  PinvResult result;
  if (a.empty()) {
    result.pinv = QMatrix(a.cols(), a.rows());
    return result;
  }
  const ComplexMatrix chi = to_complex_adjoint(a);
  Eigen::JacobiSVD<ComplexMatrix> svd(chi, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double threshold =
      rank_threshold(sigma, chi.rows(), chi.cols(), policy);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
  std::size_t kept = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) {
      inv(i) = 1.0 / sigma(i);
      result.sigma_min_kept = sigma(i);  // sigma is descending
      ++kept;
    } else if (result.sigma_max_dropped == 0.0) {
      result.sigma_max_dropped = sigma(i);
    }
  }
  const ComplexMatrix cpinv =
      svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  // chi commutes with the pseudoinverse, so the structure check never fires
  // unless the kept count split a sigma pair.
  result.pinv = from_complex_adjoint(cpinv);
  result.rank = kept / 2;
  return result;
}

QMatrix pinv(const QMatrix& a, const RankPolicy& policy) {
  return pinv_full(a, policy).pinv;
}

QMatrix proj_L(const QMatrix& a, const RankPolicy& policy) {
  return QMatrix::identity(a.cols()) - pinv(a, policy) * a;
}

QMatrix proj_R(const QMatrix& a, const RankPolicy& policy) {
  return QMatrix::identity(a.rows()) - a * pinv(a, policy);
}

Eigen::VectorXcd least_squares(const ComplexMatrix& m,
                               const Eigen::VectorXcd& rhs,
                               const RankPolicy& policy) {
  if (m.cols() == 0) return Eigen::VectorXcd(0);
  if (m.rows() == 0) return Eigen::VectorXcd::Zero(m.cols());
  return complex_pinv(m, policy) * rhs;
}

}  // namespace qsylv
