#include "evc/game.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_map>

#include "evc/errors.hpp"
#include "evc/vertex_cover.hpp"

namespace evc {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }

/// Kuhn augmenting-path matching between guard positions and target vertices, where a
/// guard on x may reach x itself or any neighbor of x.
class StepMatcher {
 public:
  explicit StepMatcher(const Graph& g) : reach_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) reach_[static_cast<std::size_t>(v)] = g.neighbor_mask(v) | bit(v);
  }

  /// Perfect matching from `from` onto `to`; fills `mate_of_target` on success.
  bool perfect(Mask from, Mask to, std::vector<int>* mate_of_target = nullptr) {
    if (std::popcount(from) != std::popcount(to)) return false;
    mate_.assign(reach_.size(), -1);
    for (Mask m = from; m; m &= m - 1) {
      int x = lowest(m);
      if (!(reach_[static_cast<std::size_t>(x)] & to)) return false;
    }
    for (Mask m = from; m; m &= m - 1) {
      Mask visited = 0;
      if (!augment(lowest(m), to, visited)) return false;
    }
    if (mate_of_target) *mate_of_target = mate_;
    return true;
  }

  /// Crossing from -> to pinned; the remaining guards must match the remaining targets.
  bool with_crossing(Mask s, Mask t, Crossing c, std::vector<int>* mate_of_target = nullptr) {
    if (!(s & bit(c.from)) || !(t & bit(c.to))) return false;
    if (!(reach_[static_cast<std::size_t>(c.from)] & bit(c.to))) return false;
    return perfect(s & ~bit(c.from), t & ~bit(c.to), mate_of_target);
  }

 private:
  bool augment(int x, Mask to, Mask& visited) {
    for (Mask m = reach_[static_cast<std::size_t>(x)] & to & ~visited; m; m &= m - 1) {
      int y = lowest(m);
      visited |= bit(y);
      int& owner = mate_[static_cast<std::size_t>(y)];
      if (owner < 0 || augment(owner, to, visited)) {
        owner = x;
        return true;
      }
    }
    return false;
  }

  std::vector<Mask> reach_;
  std::vector<int> mate_;
};

void check_mask_graph(const Graph& g) {
  if (g.order() > 63) throw LimitError("game solver supports at most 63 vertices");
}

/// Greatest fixed point of "every attack can be answered inside the family".
class SafeFamilySolver {
 public:
  SafeFamilySolver(const Graph& g, int k, Mask forced, const SolverLimits& limits)
      : matcher_(g), edges_(g.edges()) {
    configs_ = cover_masks(g, k, forced, limits);
    closed_.resize(configs_.size());
    for (std::size_t i = 0; i < configs_.size(); ++i) {
      Mask c = configs_[i];
      for (Mask m = configs_[i]; m; m &= m - 1) c |= g.neighbor_mask(lowest(m));
      closed_[i] = c;
    }
  }

  std::vector<Mask> solve(FixedPointStats* stats) {
    alive_.assign(configs_.size(), 1);
    std::size_t alive_count = configs_.size();
    int sweeps = 0;
    while (true) {
      ++sweeps;
      std::vector<std::size_t> doomed;
      for (std::size_t i = 0; i < configs_.size(); ++i)
        if (alive_[i] && !defends_everything(i)) doomed.push_back(i);
      // Deletions take effect between sweeps.
      for (std::size_t i : doomed) alive_[i] = 0;
      alive_count -= doomed.size();
      if (doomed.empty() || alive_count == 0) break;
    }
    std::vector<Mask> out;
    for (std::size_t i = 0; i < configs_.size(); ++i)
      if (alive_[i]) out.push_back(configs_[i]);
    if (stats) {
      stats->sweeps = sweeps;
      stats->covers = configs_.size();
      stats->survivors = out.size();
    }
    return out;
  }

 private:
  bool defends_everything(std::size_t i) {
    Mask s = configs_[i];
    for (const Edge& e : edges_) {
      bool has_u = s & bit(e.u), has_v = s & bit(e.v);
      if (has_u && has_v) continue;  // swap across the edge, stay in s
      if (!has_u && !has_v) return false;
      Crossing c = has_u ? Crossing{e.u, e.v} : Crossing{e.v, e.u};
      if (!answerable(i, c)) return false;
    }
    return true;
  }

  bool answerable(std::size_t i, Crossing c) {
    Mask s = configs_[i];
    for (std::size_t j = 0; j < configs_.size(); ++j) {
      if (!alive_[j]) continue;
      Mask t = configs_[j];
      if (!(t & bit(c.to)) || (t & ~closed_[i])) continue;
      std::uint64_t key = ((static_cast<std::uint64_t>(i) * configs_.size() + j) * 64 +
                           static_cast<std::uint64_t>(c.from)) * 64 + static_cast<std::uint64_t>(c.to);
      auto [it, inserted] = memo_.try_emplace(key, false);
      if (inserted) it->second = matcher_.with_crossing(s, t, c);
      if (it->second) return true;
    }
    return false;
  }

  StepMatcher matcher_;
  std::vector<Edge> edges_;
  std::vector<Mask> configs_;
  std::vector<Mask> closed_;
  std::vector<char> alive_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

std::vector<Configuration> to_sets(const std::vector<Mask>& masks) {
  std::vector<Configuration> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(VertexSet::from_mask(m));
  return out;
}

}  // namespace

std::optional<MoveSet> legal_transition(const Graph& g, const Configuration& s, const Configuration& t,
                                        std::optional<Crossing> crossing) {
  check_mask_graph(g);
  if (s.size() != t.size()) return std::nullopt;
  StepMatcher matcher(g);
  std::vector<int> mate;
  Mask sm = s.mask(), tm = t.mask();
  bool ok = crossing ? matcher.with_crossing(sm, tm, *crossing, &mate) : matcher.perfect(sm, tm, &mate);
  if (!ok) return std::nullopt;
  MoveSet moves;
  if (crossing) moves.push_back({crossing->from, crossing->to});
  for (Vertex y : t) {
    if (crossing && y == crossing->to) continue;
    moves.push_back({mate[static_cast<std::size_t>(y)], y});
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<Configuration> safe_family(const Graph& g, int k, const VertexSet& forced, const SolverLimits& limits,
                                       FixedPointStats* stats) {
  check_mask_graph(g);
  if (stats) stats->k = k;
  SafeFamilySolver solver(g, k, forced.mask(), limits);
  return to_sets(solver.solve(stats));
}

EvcResult evc_exact(const Graph& g, const SolverLimits& limits) {
  if (!is_connected(g)) throw PreconditionError("evc_exact requires a connected graph");
  EvcResult result;
  result.mvc = mvc_exact(g, limits).size;
  int hi = std::max(result.mvc, std::min(2 * result.mvc, g.order() - 1));
  for (int k = result.mvc; k <= hi; ++k) {
    FixedPointStats stats;
    auto family = safe_family(g, k, {}, limits, &stats);
    result.iterations.push_back(stats);
    if (!family.empty()) {
      result.evc = k;
      result.safe_family = std::move(family);
      return result;
    }
  }
  throw InvariantError("no safe family within [mvc, 2 mvc]; upper bound violated");
}

int evc_forced_exact(const Graph& g, const VertexSet& forced, const SolverLimits& limits) {
  int lo = mvc_forced(g, forced, SolverMode::exact, limits).size;
  for (int k = lo; k <= g.order(); ++k)
    if (!safe_family(g, k, forced, limits).empty()) return k;
  throw InvariantError("no forced safe family up to n guards");
}

namespace {

/// Retrograde analysis over the explicit game graph. Attacker positions are k-subsets;
/// defender positions are (subset, attacked edge). Legality is decided by a subset DP
/// over guard-to-target assignments, independent of the matching code above.
class RetrogradeOracle {
 public:
  RetrogradeOracle(const Graph& g, int k) : g_(g), k_(k), edges_(g.edges()) {
    for (Vertex v = 0; v < g.order(); ++v) reach_.push_back(g.neighbor_mask(v) | bit(v));
  }

  bool defender_wins() {
    if (k_ < 0 || k_ > g_.order()) return false;
    enumerate_states(0, 0, 0);
    const std::size_t states = states_.size();
    const std::size_t m = edges_.size();
    if (states == 0) return false;
    if (m == 0) return true;

    // pending[s * m + e]: defender replies from (s, e) not yet known to lose.
    std::vector<int> pending(states * m, 0);
    std::vector<std::vector<std::size_t>> predecessors(states);
    for (std::size_t s = 0; s < states; ++s) {
      Mask closed = 0;
      for (Mask x = states_[s]; x; x &= x - 1) closed |= reach_[static_cast<std::size_t>(lowest(x))];
      for (std::size_t t = 0; t < states; ++t) {
        if (states_[t] & ~closed) continue;
        if (!assignable(states_[s], states_[t], -1, -1)) continue;
        for (std::size_t e = 0; e < m; ++e) {
          if (reply_exists(states_[s], states_[t], edges_[e])) {
            ++pending[s * m + e];
            predecessors[t].push_back(s * m + e);
          }
        }
      }
    }

    std::vector<char> lost(states, 0);
    std::queue<std::size_t> frontier;
    for (std::size_t s = 0; s < states; ++s) {
      for (std::size_t e = 0; e < m; ++e) {
        if (pending[s * m + e] == 0) {
          lost[s] = 1;
          frontier.push(s);
          break;
        }
      }
    }
    while (!frontier.empty()) {
      std::size_t t = frontier.front();
      frontier.pop();
      for (std::size_t node : predecessors[t]) {
        std::size_t s = node / m;
        if (--pending[node] == 0 && !lost[s]) {
          lost[s] = 1;
          frontier.push(s);
        }
      }
    }
    return std::find(lost.begin(), lost.end(), 0) != lost.end();
  }

 private:
  void enumerate_states(int v, Mask chosen, int count) {
    if (count == k_) {
      states_.push_back(chosen);
      return;
    }
    if (v == g_.order() || g_.order() - v < k_ - count) return;
    enumerate_states(v + 1, chosen | bit(v), count + 1);
    enumerate_states(v + 1, chosen, count);
  }

  bool reply_exists(Mask s, Mask t, const Edge& e) const {
    return assignable(s, t, e.u, e.v) || assignable(s, t, e.v, e.u);
  }

  // Can the guards of s be sent bijectively onto t with the guard on `a` going to `b`?
  // a < 0 leaves every guard free.
  bool assignable(Mask s, Mask t, int a, int b) const {
    if (a >= 0 && (!(s & bit(a)) || !(t & bit(b)) || !(reach_[static_cast<std::size_t>(a)] & bit(b)))) return false;
    std::vector<int> guards, targets;
    for (Mask x = s; x; x &= x - 1) guards.push_back(lowest(x));
    for (Mask x = t; x; x &= x - 1) targets.push_back(lowest(x));
    const std::size_t size = guards.size();
    std::vector<char> reachable(std::size_t{1} << size, 0);
    reachable[0] = 1;
    for (std::size_t used = 0; used < reachable.size(); ++used) {
      if (!reachable[used]) continue;
      auto i = static_cast<std::size_t>(std::popcount(used));
      if (i == size) return true;
      int guard = guards[i];
      for (std::size_t j = 0; j < size; ++j) {
        if (used & (std::size_t{1} << j)) continue;
        int target = targets[j];
        bool ok = guard == a ? target == b : (reach_[static_cast<std::size_t>(guard)] & bit(target)) != 0;
        if (ok) reachable[used | (std::size_t{1} << j)] = 1;
      }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<Mask> reach_;
  std::vector<Mask> states_;
};

}  // namespace

bool minimax_oracle(const Graph& g, int k, const SolverLimits& limits) {
  if (g.order() > limits.enumeration_max_vertices || g.order() > 20)
    throw LimitError("minimax oracle limited to " + std::to_string(std::min(limits.enumeration_max_vertices, 20)) +
                     " vertices");
  return RetrogradeOracle(g, k).defender_wins();
}

}  // namespace evc
