#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "qsylv/qmatrix.hpp"

namespace qsylv {

// Computation carrier for the embedding chi : H^{m x n} -> C^{2m x 2n}.
// Internal to the library; never part of a file format.
using ComplexMatrix = Eigen::MatrixXcd;

// Relative rank threshold: a singular value sigma counts toward rank iff
// sigma > rel_tol * sigma_max * max(rows, cols) of the factored carrier
// matrix (rank 0 when sigma_max = 0). One policy object is threaded through
// a whole solvability report so every rank decision shares the same knob.
struct RankPolicy {
  double rel_tol = 1e-10;
};

struct PinvResult {
  QMatrix pinv;
  std::size_t rank = 0;  // quaternion rank, i.e. half the kept sigma count
  double sigma_min_kept = 0.0;
  double sigma_max_dropped = 0.0;
};

// chi(A): write A = A1 + A2*j with complex A1, A2 and emit the 2m x 2n
// block matrix [[A1, A2], [-conj(A2), conj(A1)]]. Injective algebra
// homomorphism: chi(AB) = chi(A) chi(B), chi(A*) = chi(A)^H.
ComplexMatrix to_complex_adjoint(const QMatrix& a);

// Inverse of the embedding. Requires even dimensions and the adjoint block
// structure to 1e-8 relative (the two redundant copies are averaged before
// extraction); otherwise throws StructureViolation.
QMatrix from_complex_adjoint(const ComplexMatrix& m);

Eigen::VectorXd singular_values(const ComplexMatrix& m);

// Rank of a complex matrix under the policy threshold.
std::size_t complex_rank(const ComplexMatrix& m, const RankPolicy& policy);

// Rank of a complex matrix whose singular values must come in equal pairs
// (an embedded quaternion matrix); returns half the kept count and throws
// PairingViolation when that count is odd.
std::size_t paired_rank(const ComplexMatrix& m, const RankPolicy& policy);

// Quaternion rank via the embedding.
std::size_t rank(const QMatrix& a, const RankPolicy& policy);

// SVD-thresholded pseudoinverse of a complex matrix.
ComplexMatrix complex_pinv(const ComplexMatrix& m, const RankPolicy& policy);

// Moore-Penrose inverse of a quaternion matrix through the embedding, with
// rank and sigma diagnostics.
PinvResult pinv_full(const QMatrix& a, const RankPolicy& policy);
QMatrix pinv(const QMatrix& a, const RankPolicy& policy);

// Projectors L_A = I - A†A (cols x cols) and R_A = I - A A† (rows x rows).
QMatrix proj_L(const QMatrix& a, const RankPolicy& policy);
QMatrix proj_R(const QMatrix& a, const RankPolicy& policy);

// min-norm least-squares solution of M x = rhs via the same SVD kernel.
Eigen::VectorXcd least_squares(const ComplexMatrix& m,
                               const Eigen::VectorXcd& rhs,
                               const RankPolicy& policy);

}  // namespace qsylv
