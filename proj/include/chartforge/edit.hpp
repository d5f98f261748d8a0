#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>

#include "chartforge/attributes.hpp"
#include "chartforge/edit_op.hpp"
#include "chartforge/spec.hpp"

namespace chartforge {

struct EditResult {
  ChartSpec edited;
  /// Keys of `edited` whose value differs from the source (X_c).
  std::set<std::string> changed_keys;
  /// Remaining keys of `edited` (X_u).
  std::set<std::string> unchanged_keys;
  /// Source keys that no longer exist, e.g. properties of a dropped series.
  std::set<std::string> removed_keys;
};

/// Applies one edit. Throws TargetMissing, EmptyResult, DimensionMismatch,
/// InvalidForChartType or PoolViolation.
EditResult apply_edit(const ChartSpec& spec, const EditOp& op);

/// Applies ops left to right.
ChartSpec apply_edits(ChartSpec spec, std::span<const EditOp> ops);

/// Seed for the pool draws an edit makes, derived from the spec and the op.
std::uint64_t edit_seed(const ChartSpec& spec, const EditOp& op);

}  // namespace chartforge
