#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsylv/sylvester.hpp"

namespace qsylv {

// Coupled chain: equation i is A_i X_i B_i + C_i X_{i+1} D_i = E_i for
// i = 1..k, with X_{i+1} shared between equations i and i+1. The coupling
// forces q_{i+1} = t_i and r_{i+1} = u_i; X_i is q_i x r_i and the trailing
// unknown X_{k+1} is t_k x u_k.
struct ChainSystem {
  std::vector<SingleEquation> equations;

  std::size_t k() const { return equations.size(); }
  const SingleEquation& eq(std::size_t i) const { return equations[i - 1]; }

  // Shape of unknown X_i, 1-based, i = 1..k+1.
  std::pair<std::size_t, std::size_t> unknown_shape(std::size_t i) const;
};

void validate(const ChainSystem& sys);  // throws DimError

// All 2k(k+1) certificate ids: four per equation, four per window m < n.
std::vector<ConditionId> enumerate_conditions(std::size_t k);

struct ConditionMatrices {
  QMatrix lhs;
  std::vector<QMatrix> rhs_parts;  // ranks on the right-hand side are summed
};

// Materializes the block matrices of one rank equality exactly as the
// certificate states them, including the (-1)^{i-m} signs on the E blocks.
ConditionMatrices build_condition(const ChainSystem& sys,
                                  const ConditionId& id);

SolvabilityReport check_chain(const ChainSystem& sys, const RankPolicy& policy);

// Worst-case residuals of the reduction identities, checked on every reduce:
//   fact1: (head_i, tail_i) solves equation i
//   fact2: A_{j+1} A_{j+1}† S_{j+1} = S_{j+1}
//   fact3: r([R_N_j ; R_D_j]) = r(R_N_j) as integers
//   fact4: R_N_{j+1} D_{j+1} B_{j+1}† B_{j+1} = R_N_{j+1} D_{j+1}
struct FactChecks {
  double fact1 = 0.0;
  double fact2 = 0.0;
  double fact4 = 0.0;
  bool fact3 = true;
};

// Everything the back-substitution needs, kept per reduction level.
// Junction j couples equations j and j+1 (j = 1..k-1): the matching system
//   [L_M_j L_S_j, -L_A_{j+1}] U + V [R_D_j ; -R_B_{j+1}] = G_j
// with G_j = F_j - L_M_j Y_j R_N_j - A_{j+1}† S_{j+1} Y_{j+1} R_N_{j+1} D_{j+1} B_{j+1}†.
struct ReductionContext {
  std::vector<SingleContext> eq_ctx;  // per equation, index 0 = equation 1
  std::vector<QMatrix> head_part;     // zero-parameter X_i particular of eq i
  std::vector<QMatrix> tail_part;     // zero-parameter X_{i+1} particular of eq i
  std::vector<QMatrix> F;             // per junction: head_part[j+1] - tail_part[j]
  std::vector<QMatrix> P;             // per junction: [L_M L_S, -L_A']
  std::vector<QMatrix> Q;             // per junction: [R_D ; -R_B']
  std::vector<QMatrix> R_P;           // projector of P
  std::vector<QMatrix> L_Q;           // projector of Q
  FactChecks facts;
};

// One induction step: eliminate the Z unknowns and return the chain of k-1
// equations in the free parameters Y_1..Y_k, with
//   hat_A_j = R_P L_M_j,   hat_B_j = R_N_j L_Q,
//   hat_C_j = R_P A_{j+1}† S_{j+1},
//   hat_D_j = R_N_{j+1} D_{j+1} B_{j+1}† L_Q,   hat_E_j = R_P F_j L_Q.
// Requires k >= 2 and every equation to pass its own four rank conditions;
// throws PerEquationInconsistent otherwise.
std::pair<ChainSystem, ReductionContext> reduce(const ChainSystem& sys,
                                                const RankPolicy& policy);

struct ChainSolution {
  std::vector<QMatrix> X;         // k+1 unknowns
  std::vector<double> residuals;  // per equation, relative
  double max_residual = 0.0;
};

// Constructive solver: solve the single equation at k = 1, otherwise reduce,
// recurse on the hatted chain for Y_1..Y_k, back-substitute junction by
// junction and assemble X_1 from equation 1 and X_{i+1} from equation i.
// Throws InconsistentError naming the failing condition and level.
ChainSolution solve_chain(const ChainSystem& sys, const RankPolicy& policy);

// The one-sided chain A_i X_i + X_{i+1} D_i = E_i embedded with B_i and C_i
// identity blocks of the forced sizes.
ChainSystem one_sided_chain(const std::vector<QMatrix>& A,
                            const std::vector<QMatrix>& D,
                            const std::vector<QMatrix>& E);

enum class GenMode { consistent, perturbed };

// Forward construction: random coefficients and unknowns, E_i defined by the
// equation; perturbed mode additionally adds a random matrix to one E_i.
// Deterministic per (k, dims, seed, mode).
ChainSystem generate(std::size_t k, std::size_t dims, std::uint64_t seed,
                     GenMode mode);

// ||A Xi B + C Xi1 D - E||_F / (1 + ||E||_F)
double equation_residual(const SingleEquation& eq, const QMatrix& Xi,
                         const QMatrix& Xi1);
std::vector<double> chain_residuals(const ChainSystem& sys,
                                    const std::vector<QMatrix>& X);

// Staircase builders shared by the generic and eta certificates. Windows are
// 1-based with m < n. Names follow the block layout: diag_* are the
// block-diagonal right-hand sides, stair_*_lhs the coupled left-hand sides.
QMatrix stair_row_lhs(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix stair_col_lhs(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix stair_ad_lhs(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix stair_bc_lhs(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_ac(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_ac_trunc(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_ca_full(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_ca_trunc(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_db(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_db_tail(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_bd_full(const ChainSystem& sys, std::size_t m, std::size_t n);
QMatrix diag_bd_trunc(const ChainSystem& sys, std::size_t m, std::size_t n);

}  // namespace qsylv
