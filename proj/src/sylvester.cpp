#include "qsylv/sylvester.hpp"

#include <string>

#include "qsylv/blocks.hpp"
#include "qsylv/errors.hpp"

namespace qsylv {

void validate(const SingleEquation& eq) {
  if (eq.C.rows() != eq.p())
    throw DimError("rows(C) = " + std::to_string(eq.C.rows()) +
                   " != rows(A) = " + std::to_string(eq.p()));
  if (eq.E.rows() != eq.p())
    throw DimError("rows(E) = " + std::to_string(eq.E.rows()) +
                   " != rows(A) = " + std::to_string(eq.p()));
  if (eq.D.cols() != eq.s())
    throw DimError("cols(D) = " + std::to_string(eq.D.cols()) +
                   " != cols(B) = " + std::to_string(eq.s()));
  if (eq.E.cols() != eq.s())
    throw DimError("cols(E) = " + std::to_string(eq.E.cols()) +
                   " != cols(B) = " + std::to_string(eq.s()));
}

SingleContext SingleContext::make(const SingleEquation& eq,
                                  const RankPolicy& policy) {
  SingleContext ctx;
  ctx.A_pinv = pinv(eq.A, policy);
  ctx.B_pinv = pinv(eq.B, policy);
  ctx.C_pinv = pinv(eq.C, policy);
  ctx.D_pinv = pinv(eq.D, policy);

  ctx.L_A = QMatrix::identity(eq.q()) - ctx.A_pinv * eq.A;
  ctx.R_A = QMatrix::identity(eq.p()) - eq.A * ctx.A_pinv;
  ctx.L_B = QMatrix::identity(eq.s()) - ctx.B_pinv * eq.B;
  ctx.R_B = QMatrix::identity(eq.r()) - eq.B * ctx.B_pinv;
  ctx.L_D = QMatrix::identity(eq.s()) - ctx.D_pinv * eq.D;
  ctx.R_D = QMatrix::identity(eq.u()) - eq.D * ctx.D_pinv;
  ctx.R_C = QMatrix::identity(eq.p()) - eq.C * ctx.C_pinv;

  ctx.M = ctx.R_A * eq.C;
  ctx.N = eq.D * ctx.L_B;
  ctx.M_pinv = pinv(ctx.M, policy);
  ctx.N_pinv = pinv(ctx.N, policy);
  ctx.L_M = QMatrix::identity(eq.t()) - ctx.M_pinv * ctx.M;
  ctx.R_M = QMatrix::identity(eq.p()) - ctx.M * ctx.M_pinv;
  ctx.L_N = QMatrix::identity(eq.s()) - ctx.N_pinv * ctx.N;
  ctx.R_N = QMatrix::identity(eq.u()) - ctx.N * ctx.N_pinv;

  ctx.S = eq.C * ctx.L_M;
  ctx.S_pinv = pinv(ctx.S, policy);
  ctx.L_S = QMatrix::identity(eq.t()) - ctx.S_pinv * ctx.S;
  return ctx;
}

SingleParams SingleParams::zero(const SingleEquation& eq) {
  SingleParams p;
  p.Y1 = QMatrix(eq.t(), eq.u());
  p.Y2 = QMatrix(eq.q(), eq.r());
  p.Y3 = QMatrix(eq.q(), eq.r());
  p.Y4 = QMatrix(eq.t(), eq.u());
  p.Y5 = QMatrix(eq.t(), eq.u());
  return p;
}

ProjectorCheckResult check_single_projector(const SingleEquation& eq,
                                            const RankPolicy& policy) {
  validate(eq);
  const SingleContext ctx = SingleContext::make(eq, policy);

  ProjectorCheckResult out;
  out.scale = frobenius_norm(eq.E);
  out.residuals[0] = frobenius_norm(ctx.R_M * (ctx.R_A * eq.E));
  out.residuals[1] = frobenius_norm((eq.E * ctx.L_B) * ctx.L_N);
  out.residuals[2] = frobenius_norm(ctx.R_A * eq.E * ctx.L_D);
  out.residuals[3] = frobenius_norm(ctx.R_C * eq.E * ctx.L_B);

  const double tol = policy.rel_tol * out.scale;
  out.consistent = true;
  for (double r : out.residuals) out.consistent = out.consistent && r <= tol;
  return out;
}

namespace {

ConditionEntry rank_entry(ConditionId id, const QMatrix& lhs,
                          const std::vector<QMatrix>& rhs_parts,
                          const RankPolicy& policy) {
  ConditionEntry entry;
  entry.id = id;
  entry.lhs_rank = rank(lhs, policy);
  entry.rhs_rank = 0;
  for (const auto& part : rhs_parts) entry.rhs_rank += rank(part, policy);
  entry.holds = entry.lhs_rank == entry.rhs_rank;
  return entry;
}

}  // namespace

SolvabilityReport check_single_rank(const SingleEquation& eq,
                                    const RankPolicy& policy) {
  validate(eq);
  SolvabilityReport report;
  report.rel_tol = policy.rel_tol;

  // r(A E C) = r(A C)
  report.entries.push_back(rank_entry({ConditionKind::row, 1, 1},
                                      hcat({eq.A, eq.E, eq.C}),
                                      {hcat({eq.A, eq.C})}, policy));
  // r(B; E; D) = r(B; D)
  report.entries.push_back(rank_entry({ConditionKind::col, 1, 1},
                                      vcat({eq.B, eq.E, eq.D}),
                                      {vcat({eq.B, eq.D})}, policy));
  // r([A E; 0 D]) = r(A) + r(D)
  BlockGrid ad({eq.p(), eq.u()}, {eq.q(), eq.s()});
  ad.set(0, 0, eq.A).set(0, 1, eq.E).set(1, 1, eq.D);
  report.entries.push_back(rank_entry({ConditionKind::diag_ad, 1, 1},
                                      ad.assemble(), {eq.A, eq.D}, policy));
  // r([B 0; E C]) = r(B) + r(C)
  BlockGrid bc({eq.r(), eq.p()}, {eq.s(), eq.t()});
  bc.set(0, 0, eq.B).set(1, 0, eq.E).set(1, 1, eq.C);
  report.entries.push_back(rank_entry({ConditionKind::diag_bc, 1, 1},
                                      bc.assemble(), {eq.B, eq.C}, policy));

  report.overall = true;
  for (const auto& e : report.entries)
    report.overall = report.overall && e.holds;
  return report;
}

QMatrix head_solution(const SingleEquation& eq, const SingleContext& ctx,
                      const QMatrix& Y1, const QMatrix& Z1, const QMatrix& Z2) {
  const QMatrix EBp = eq.E * ctx.B_pinv;
  QMatrix x = ctx.A_pinv * EBp;
  x = x - ctx.A_pinv * (eq.C * (ctx.M_pinv * EBp));
  const QMatrix ApS = ctx.A_pinv * ctx.S;
  const QMatrix DBp = eq.D * ctx.B_pinv;
  x = x - ApS * (ctx.C_pinv * eq.E * ctx.N_pinv) * DBp;
  x = x - ApS * (Y1 * ctx.R_N) * DBp;
  x = x + ctx.L_A * Z1;
  x = x + Z2 * ctx.R_B;
  return x;
}

QMatrix tail_solution(const SingleEquation& eq, const SingleContext& ctx,
                      const QMatrix& Y1, const QMatrix& Z3, const QMatrix& Z4) {
  QMatrix x = ctx.M_pinv * eq.E * ctx.D_pinv;
  x = x + ctx.S_pinv * ctx.S * (ctx.C_pinv * eq.E * ctx.N_pinv);
  x = x + ctx.L_M * (ctx.L_S * Z3);
  x = x + Z4 * ctx.R_D;
  x = x + ctx.L_M * Y1 * ctx.R_N;
  return x;
}

std::pair<QMatrix, QMatrix> solve_single(const SingleEquation& eq,
                                         const SingleParams& params,
                                         const RankPolicy& policy) {
  const SolvabilityReport report = check_single_rank(eq, policy);
  if (!report.overall) {
    for (const auto& entry : report.entries) {
      if (!entry.holds) {
        throw InconsistentError(
            "single equation inconsistent: " + to_string(entry.id) +
            " fails with r(lhs) = " + std::to_string(entry.lhs_rank) +
            ", r(rhs) = " + std::to_string(entry.rhs_rank));
      }
    }
  }
  const SingleContext ctx = SingleContext::make(eq, policy);
  return {head_solution(eq, ctx, params.Y1, params.Y2, params.Y3),
          tail_solution(eq, ctx, params.Y1, params.Y4, params.Y5)};
}

double two_block_defect(const QMatrix& P, const QMatrix& Q, const QMatrix& G,
                        const RankPolicy& policy) {
  return frobenius_norm(proj_R(P, policy) * G * proj_L(Q, policy));
}

std::pair<QMatrix, QMatrix> two_block_particular(const QMatrix& P,
                                                 const QMatrix& Q,
                                                 const QMatrix& G,
                                                 const RankPolicy& policy) {
  if (P.rows() != G.rows())
    throw DimError("two-block: rows(P) != rows(G)");
  if (Q.cols() != G.cols())
    throw DimError("two-block: cols(Q) != cols(G)");
  const QMatrix P_pinv = pinv(P, policy);
  const QMatrix R_P = QMatrix::identity(P.rows()) - P * P_pinv;
  return {P_pinv * G, R_P * G * pinv(Q, policy)};
}

std::pair<QMatrix, QMatrix> solve_two_block(const QMatrix& P, const QMatrix& Q,
                                            const QMatrix& G,
                                            const RankPolicy& policy) {
  if (P.rows() != G.rows())
    throw DimError("two-block: rows(P) != rows(G)");
  if (Q.cols() != G.cols())
    throw DimError("two-block: cols(Q) != cols(G)");
  const double defect = two_block_defect(P, Q, G, policy);
  if (defect > policy.rel_tol * (1.0 + frobenius_norm(G))) {
    throw InconsistentError(
        "two-block equation inconsistent: ||R_P G L_Q||_F = " +
        std::to_string(defect));
  }
  return two_block_particular(P, Q, G, policy);
}

}  // namespace qsylv
