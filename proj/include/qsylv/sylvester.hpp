#pragma once

#include <array>
#include <utility>

#include "qsylv/numeric.hpp"
#include "qsylv/report.hpp"

namespace qsylv {

// One two-sided equation A X1 B + C X2 D = E.
// Shapes: A p x q, B r x s, C p x t, D u x s, E p x s;
// the unknowns are X1 (q x r) and X2 (t x u). Any dimension may be zero.
struct SingleEquation {
  QMatrix A, B, C, D, E;

  std::size_t p() const { return A.rows(); }
  std::size_t q() const { return A.cols(); }
  std::size_t r() const { return B.rows(); }
  std::size_t s() const { return B.cols(); }
  std::size_t t() const { return C.cols(); }
  std::size_t u() const { return D.rows(); }
};

void validate(const SingleEquation& eq);  // throws DimError

// Derived data of the single-equation solvability lemma:
// M = R_A C, N = D L_B, S = C L_M, with the pseudoinverses and projectors
// the solution formulas need. R_A S = 0 by construction.
struct SingleContext {
  QMatrix M, N, S;
  QMatrix A_pinv, B_pinv, C_pinv, D_pinv, M_pinv, N_pinv, S_pinv;
  QMatrix L_A, R_A, L_B, R_B, L_D, R_D, R_C, L_M, R_M, L_N, R_N, L_S;

  static SingleContext make(const SingleEquation& eq, const RankPolicy& policy);
};

// Free parameters of the general solution family; the all-zero draw selects
// the deterministic particular solution.
struct SingleParams {
  QMatrix Y1;  // t x u
  QMatrix Y2;  // q x r
  QMatrix Y3;  // q x r
  QMatrix Y4;  // t x u
  QMatrix Y5;  // t x u

  static SingleParams zero(const SingleEquation& eq);
};

struct ProjectorCheckResult {
  bool consistent = false;
  // Frobenius norms of R_M R_A E, E L_B L_N, R_A E L_D, R_C E L_B.
  std::array<double, 4> residuals{};
  double scale = 0.0;  // ||E||_F
};

// Projector criterion: all four products vanish relative to ||E||_F.
ProjectorCheckResult check_single_projector(const SingleEquation& eq,
                                            const RankPolicy& policy);

// Rank criterion: the four single-equation rank equalities, as integers.
SolvabilityReport check_single_rank(const SingleEquation& eq,
                                    const RankPolicy& policy);

// X1-side of the general solution:
// X1 = A†EB† - A†C M†E B† - A†S C†E N†D B† - A†S Y1 R_N D B† + L_A Z1 + Z2 R_B
QMatrix head_solution(const SingleEquation& eq, const SingleContext& ctx,
                      const QMatrix& Y1, const QMatrix& Z1, const QMatrix& Z2);

// X2-side of the general solution:
// X2 = M†E D† + S†S C†E N† + L_M L_S Z3 + Z4 R_D + L_M Y1 R_N
QMatrix tail_solution(const SingleEquation& eq, const SingleContext& ctx,
                      const QMatrix& Y1, const QMatrix& Z3, const QMatrix& Z4);

// General solution evaluated at the given parameters; checks the rank
// criterion first and throws InconsistentError naming the failing condition.
std::pair<QMatrix, QMatrix> solve_single(const SingleEquation& eq,
                                         const SingleParams& params,
                                         const RankPolicy& policy);

// ||R_P G L_Q||_F, the consistency defect of P U + V Q = G.
double two_block_defect(const QMatrix& P, const QMatrix& Q, const QMatrix& G,
                        const RankPolicy& policy);

// Particular solution of P U + V Q = G: U = P†G, V = R_P G Q†. Exact
// whenever R_P G L_Q = 0; no consistency check.
std::pair<QMatrix, QMatrix> two_block_particular(const QMatrix& P,
                                                 const QMatrix& Q,
                                                 const QMatrix& G,
                                                 const RankPolicy& policy);

// Same, but throws InconsistentError (carrying the defect) when
// ||R_P G L_Q||_F exceeds rel_tol * (1 + ||G||_F).
std::pair<QMatrix, QMatrix> solve_two_block(const QMatrix& P, const QMatrix& Q,
                                            const QMatrix& G,
                                            const RankPolicy& policy);

}  // namespace qsylv
