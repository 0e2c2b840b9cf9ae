#include "qsylv/report.hpp"

namespace qsylv {

std::string_view to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::row:
      return "row";
    case ConditionKind::col:
      return "col";
    case ConditionKind::diag_ad:
      return "diag_ad";
    case ConditionKind::diag_bc:
      return "diag_bc";
    case ConditionKind::stair_row:
      return "stair_row";
    case ConditionKind::stair_col:
      return "stair_col";
    case ConditionKind::stair_ad:
      return "stair_ad";
    case ConditionKind::stair_bc:
      return "stair_bc";
    case ConditionKind::eta_row:
      return "eta_row";
    case ConditionKind::eta_diag:
      return "eta_diag";
    case ConditionKind::eta_stair_row:
      return "eta_stair_row";
    case ConditionKind::eta_stair_ad:
      return "eta_stair_ad";
  }
  return "?";
}

bool is_pair_kind(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::stair_row:
    case ConditionKind::stair_col:
    case ConditionKind::stair_ad:
    case ConditionKind::stair_bc:
    case ConditionKind::eta_stair_row:
    case ConditionKind::eta_stair_ad:
      return true;
    default:
      return false;
  }
}

std::string to_string(const ConditionId& id) {
  std::string out(to_string(id.kind));
  if (is_pair_kind(id.kind)) {
    out += "(" + std::to_string(id.m) + "," + std::to_string(id.n) + ")";
  } else {
    out += "(" + std::to_string(id.m) + ")";
  }
  return out;
}

}  // namespace qsylv
