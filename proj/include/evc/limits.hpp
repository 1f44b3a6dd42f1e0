#pragma once

#include <string_view>

namespace evc {

/// Caps for the exponential routines. Both are hard-capped at 64 (bitmask state).
struct SolverLimits {
  int exact_max_vertices = 24;
  int enumeration_max_vertices = 16;

  /// Parses "exact=N,enum=M" (either key optional). Throws PreconditionError.
  static SolverLimits parse(std::string_view text);
  /// Reads EVC_LIMITS; defaults when unset.
  static SolverLimits from_env();
};

}  // namespace evc
