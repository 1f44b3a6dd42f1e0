#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evc/characterization.hpp"
#include "evc/game.hpp"
#include "evc/graph.hpp"

namespace evc {

enum class StrategyMode { hall_equal, connected_plus_one };

std::string to_string(StrategyMode mode);

/// One repair step of the candidate configuration.
struct RefinementStep {
  Configuration candidate;  ///< S' before the repair
  Vertex violator = 0;      ///< x in A with no perfect matching in H - {x, v}
  VertexSet deficient;      ///< B' with |N(B')| < |B'| in H - {x, v}
};

struct RefinementTrace {
  std::vector<RefinementStep> iterations;
  Configuration final;
};

/// Repairs `candidate` (a minimum cover containing x_set and v) until, for every x in
/// A = s_i - candidate, the bipartite graph H - {x, v} on A ⊎ B has a perfect matching.
/// Each repair swaps in the Hall violator found from a maximum matching by
/// alternating paths; |s_i △ candidate| must shrink every time, else InvariantError.
RefinementTrace refine_candidate(const Graph& g, const Configuration& s_i, const Configuration& candidate, Vertex v,
                                 const VertexSet& x_set);

/// Guard movement from s_i to s_j answering the crossing u -> v (u guarded, v entered).
/// u in A: u -> v plus a perfect matching of A - u onto B - v.
/// u in T = s_i ∩ s_j: shift guards along a shortest path from A to u inside
/// G[A ∪ T], u -> v, and match the rest of A onto B - v.
/// If v is already guarded, s_j must equal s_i and the guards on u and v swap.
/// Throws InvariantError when the hypotheses fail (no path, no matching).
MoveSet moves_hall_equal(const Graph& g, const Configuration& s_i, const Configuration& s_j, Crossing attack);

struct PlusOneStep {
  MoveSet moves;
  Vertex extra = 0;
};

/// Shifting strategy for configurations base ∪ {extra} with `base` a connected cover.
/// Attacks with both ends guarded are answered by a swap.
PlusOneStep moves_plus_one(const Graph& g, const Configuration& base, Vertex extra, Vertex a, Vertex b);

/// Independent validator: `moves` is a stay-or-step bijection s -> t, some guard
/// crosses the attacked edge (either direction), and t is a vertex cover.
bool verify_moveset(const Graph& g, const Configuration& s, const Configuration& t, const MoveSet& moves,
                    std::optional<Edge> attack);

struct RoundRecord {
  std::size_t round = 0;
  Vertex attack_from = 0;  ///< endpoints as given by the attacker
  Vertex attack_to = 0;
  MoveSet moves;
  Configuration config;
};

/// Live game state for one defended graph. Rounds are strictly sequential.
class DefenseSession {
 public:
  /// Picks the strategy from the characterization verdict: evc = mvc gives the
  /// matching strategy, evc = mvc + 1 on a biconnected graph gives the shifting
  /// strategy. Any other verdict throws EvidenceError. `start` overrides the
  /// deterministic initial configuration after validation.
  static DefenseSession create(const Graph& g, const CharReport& report, std::optional<Configuration> start = {},
                               SolverMode mode = SolverMode::exact, const SolverLimits& limits = {});

  StrategyMode mode() const { return mode_; }
  const Graph& graph() const { return graph_; }
  const Configuration& config() const { return config_; }
  const VertexSet& cut_vertices() const { return cut_vertices_; }
  int mvc() const { return mvc_; }
  const Configuration& base_cover() const { return base_cover_; }
  Vertex extra_vertex() const { return extra_vertex_; }
  std::size_t round() const { return round_; }
  bool finished() const { return finished_; }
  const std::vector<RoundRecord>& log() const { return log_; }
  /// Repair trace of the most recent hall-equal round.
  const RefinementTrace& last_trace() const { return last_trace_; }

  /// Answers an attack on edge {a, b}. Throws PreconditionError for a non-edge or a
  /// finished session, DefenseImpossible when the strategy cannot answer (the
  /// session is then finished).
  const RoundRecord& defend(Vertex a, Vertex b);

 private:
  DefenseSession() = default;

  MoveSet defend_hall_equal(Vertex a, Vertex b, Configuration& next);
  void check_round_invariants(const Configuration& next) const;

  Graph graph_;
  StrategyMode mode_ = StrategyMode::hall_equal;
  SolverMode solver_mode_ = SolverMode::exact;
  SolverLimits limits_;
  int mvc_ = 0;
  VertexSet cut_vertices_;
  Configuration config_;
  Configuration base_cover_;
  Vertex extra_vertex_ = -1;
  std::size_t round_ = 0;
  bool finished_ = false;
  std::vector<RoundRecord> log_;
  RefinementTrace last_trace_;
};

}  // namespace evc
