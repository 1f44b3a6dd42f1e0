#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "evc/graph.hpp"
#include "evc/limits.hpp"
#include "evc/vertex_set.hpp"

namespace evc {

/// Set of guarded vertices (one guard per vertex).
using Configuration = VertexSet;

/// One guard's movement in a round: stay (from == to) or cross one edge.
struct Move {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Movement of every guard in one round, sorted by `from`.
using MoveSet = std::vector<Move>;

/// Directed crossing demanded by an attack: some guard must go from `from` to `to`.
struct Crossing {
  Vertex from = 0;
  Vertex to = 0;
};

/// Stay-or-step bijection s -> t, optionally pinning f(crossing.from) = crossing.to.
/// Absent when no such bijection exists. Cover validity of t is the caller's concern.
std::optional<MoveSet> legal_transition(const Graph& g, const Configuration& s, const Configuration& t,
                                        std::optional<Crossing> crossing = std::nullopt);

struct FixedPointStats {
  int k = 0;
  int sweeps = 0;
  std::size_t covers = 0;
  std::size_t survivors = 0;
};

struct EvcResult {
  int evc = 0;
  int mvc = 0;
  std::vector<Configuration> safe_family;
  std::vector<FixedPointStats> iterations;
};

/// Greatest fixed point over the size-k covers containing `forced`: configurations
/// with an undefendable attack are removed sweep by sweep until none remain to remove.
std::vector<Configuration> safe_family(const Graph& g, int k, const VertexSet& forced = {},
                                       const SolverLimits& limits = {}, FixedPointStats* stats = nullptr);

/// Smallest k in [mvc, min(2 mvc, n - 1)] with a nonempty safe family. Requires a connected graph.
EvcResult evc_exact(const Graph& g, const SolverLimits& limits = {});

/// Smallest k for which the safe family restricted to covers containing `forced` is nonempty.
int evc_forced_exact(const Graph& g, const VertexSet& forced, const SolverLimits& limits = {});

/// Independent check by retrograde analysis of the attacker/defender game over all
/// k-subsets; true iff the defender can hold forever from some start.
bool minimax_oracle(const Graph& g, int k, const SolverLimits& limits = {});

}  // namespace evc
