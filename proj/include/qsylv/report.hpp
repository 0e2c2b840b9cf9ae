#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qsylv {

// Certificate entry kinds. row/col/diag_* test one equation; stair_* test a
// window m..n of coupled equations; eta_* are the Hermitian-variant kinds.
enum class ConditionKind {
  row,
  col,
  diag_ad,
  diag_bc,
  stair_row,
  stair_col,
  stair_ad,
  stair_bc,
  eta_row,
  eta_diag,
  eta_stair_row,
  eta_stair_ad,
};

std::string_view to_string(ConditionKind kind);
bool is_pair_kind(ConditionKind kind);

struct ConditionId {
  ConditionKind kind;
  std::size_t m = 0;  // equation index (single kinds) or window start, 1-based
  std::size_t n = 0;  // window end; equals m for single kinds

  bool operator==(const ConditionId&) const = default;
};

std::string to_string(const ConditionId& id);

struct ConditionEntry {
  ConditionId id;
  std::size_t lhs_rank = 0;
  std::size_t rhs_rank = 0;
  bool holds = false;
};

// Full certificate: overall is the conjunction of the entries.
struct SolvabilityReport {
  double rel_tol = 0.0;  // policy echo
  std::vector<ConditionEntry> entries;
  bool overall = false;
};

}  // namespace qsylv
