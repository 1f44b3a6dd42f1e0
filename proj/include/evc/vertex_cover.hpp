#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evc/graph.hpp"
#include "evc/limits.hpp"
#include "evc/vertex_set.hpp"

namespace evc {

/// A vertex cover together with the forced set it was computed under.
struct CoverResult {
  int size = 0;
  VertexSet cover;
  VertexSet forced;
};

enum class SolverMode {
  exact,       ///< branch and bound
  polynomial,  ///< perfect-elimination greedy when the residual graph is chordal, else exact
};

/// Optimal cover by branch and bound (branch on the least uncovered edge, greedy
/// maximal matching lower bound). The witness is the lexicographically least
/// optimal cover. Throws LimitError above limits.exact_max_vertices.
CoverResult mvc_exact(const Graph& g, const SolverLimits& limits = {});

/// Complement of the greedy maximum independent set along a perfect elimination
/// ordering. Throws PreconditionError for non-chordal input.
CoverResult mvc_chordal(const Graph& g);

/// Minimum cover containing `forced`: forced ∪ (optimal cover of G − forced).
CoverResult mvc_forced(const Graph& g, const VertexSet& forced, SolverMode mode = SolverMode::exact,
                       const SolverLimits& limits = {});

/// mvc(G) under the requested engine.
int mvc_size(const Graph& g, SolverMode mode = SolverMode::exact, const SolverLimits& limits = {});

/// True iff some minimum vertex cover of g contains `u`.
bool has_min_cover_containing(const Graph& g, const VertexSet& u, SolverMode mode = SolverMode::exact,
                              const SolverLimits& limits = {});
/// Same, reusing a known mvc(g).
bool has_min_cover_containing(const Graph& g, const VertexSet& u, int mvc, SolverMode mode,
                              const SolverLimits& limits = {});

/// Visits every vertex cover of size exactly k that contains `forced`, once each, in
/// lexicographic order of the sorted id lists. The visitor returns false to stop.
/// Throws LimitError above limits.enumeration_max_vertices.
void for_each_cover_mask(const Graph& g, int k, std::uint64_t forced,
                         const std::function<bool(std::uint64_t)>& visit, const SolverLimits& limits = {});

std::vector<std::uint64_t> cover_masks(const Graph& g, int k, std::uint64_t forced = 0,
                                       const SolverLimits& limits = {});

std::vector<VertexSet> enumerate_covers(const Graph& g, int k, const SolverLimits& limits = {});

/// Exhaustive: every cover of size mvc_x(g) containing x induces a connected subgraph.
bool all_forced_min_covers_connected(const Graph& g, const VertexSet& x, const SolverLimits& limits = {});

}  // namespace evc
