#include "evc/defense.hpp"

#include <algorithm>
#include <queue>

#include "evc/errors.hpp"
#include "evc/matching.hpp"
#include "evc/structure.hpp"

namespace evc {

std::string to_string(StrategyMode mode) {
  return mode == StrategyMode::hall_equal ? "hall-equal" : "connected-plus-one";
}

namespace {

/// Bipartite graph of g's edges between two disjoint vertex sets.
struct Sides {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  BipartiteGraph h;
};

Sides between(const Graph& g, const VertexSet& left, const VertexSet& right) {
  Sides s{left.ids(), right.ids(), BipartiteGraph(static_cast<int>(left.size()), static_cast<int>(right.size()))};
  for (std::size_t i = 0; i < s.left.size(); ++i)
    for (std::size_t j = 0; j < s.right.size(); ++j)
      if (g.adjacent(s.left[i], s.right[j])) s.h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return s;
}

VertexSet without(VertexSet s, Vertex v) {
  s.erase(v);
  return s;
}

MoveSet swap_moves(const Configuration& config, Vertex a, Vertex b) {
  MoveSet moves;
  for (Vertex w : config) {
    if (w == a) {
      moves.push_back({a, b});
    } else if (w == b) {
      moves.push_back({b, a});
    } else {
      moves.push_back({w, w});
    }
  }
  return moves;
}

/// Adds the perfect matching of `left` onto `right` to `moves`.
void append_matching(const Graph& g, const VertexSet& left, const VertexSet& right, MoveSet& moves) {
  Sides s = between(g, left, right);
  Matching m = maximum_matching(s.h);
  if (!m.perfect()) throw InvariantError("no perfect matching between the vacated and entered vertices");
  for (std::size_t i = 0; i < s.left.size(); ++i)
    moves.push_back({s.left[i], s.right[static_cast<std::size_t>(m.mate_left[i])]});
}

}  // namespace

RefinementTrace refine_candidate(const Graph& g, const Configuration& s_i, const Configuration& candidate, Vertex v,
                                 const VertexSet& x_set) {
  if (s_i.size() != candidate.size()) throw PreconditionError("refine_candidate: sizes differ");
  if (!candidate.contains(v) || s_i.contains(v)) throw PreconditionError("refine_candidate: v must be in S' - S_i");
  if (!x_set.is_subset_of(s_i) || !x_set.is_subset_of(candidate))
    throw PreconditionError("refine_candidate: forced set must lie in both configurations");

  RefinementTrace trace;
  Configuration current = candidate;
  VertexSet required = x_set;
  required.insert(v);
  while (true) {
    VertexSet a_side = s_i - current;
    VertexSet b_side = current - s_i;
    VertexSet b_rest = without(b_side, v);

    std::optional<Vertex> violator;
    for (Vertex x : a_side) {
      Sides s = between(g, without(a_side, x), b_rest);
      if (!maximum_matching(s.h).perfect()) {
        violator = x;
        break;
      }
    }
    if (!violator) break;

    if (trace.iterations.size() + 1 >= static_cast<std::size_t>(g.order()))
      throw InvariantError("candidate refinement did not settle in fewer than n iterations");

    Vertex x = *violator;
    Sides s = between(g, without(a_side, x), b_rest);
    Matching m = maximum_matching(s.h);
    auto unmatched = std::find(m.mate_right.begin(), m.mate_right.end(), kUnmatched);
    AlternatingReach reach = alternating_reach_from_right(s.h, m, static_cast<int>(unmatched - m.mate_right.begin()));

    VertexSet deficient, hall_nbrs;
    for (int r : reach.right) deficient.insert(s.right[static_cast<std::size_t>(r)]);
    for (int l : reach.left) hall_nbrs.insert(s.left[static_cast<std::size_t>(l)]);

    Configuration next = (s_i & current) | VertexSet{x} | (b_side - deficient) | hall_nbrs;
    if (next.size() != current.size() || !is_vertex_cover(g, next) || !required.is_subset_of(next) ||
        (next ^ s_i).size() >= (current ^ s_i).size())
      throw InvariantError("candidate repair did not yield a closer minimum cover");

    trace.iterations.push_back({current, x, deficient});
    current = std::move(next);
  }
  trace.final = std::move(current);
  return trace;
}

MoveSet moves_hall_equal(const Graph& g, const Configuration& s_i, const Configuration& s_j, Crossing attack) {
  const Vertex u = attack.from, v = attack.to;
  if (!s_i.contains(u)) throw PreconditionError("moves_hall_equal: attacked-from vertex must be guarded");
  if (s_i.contains(v)) {
    if (s_j != s_i) throw PreconditionError("moves_hall_equal: both ends guarded requires S_j = S_i");
    return swap_moves(s_i, u, v);
  }
  if (!s_j.contains(v)) throw PreconditionError("moves_hall_equal: v must be in S_j");

  VertexSet kept = s_i & s_j;
  VertexSet a_side = s_i - s_j;
  VertexSet b_side = s_j - s_i;
  MoveSet moves;

  if (a_side.contains(u)) {
    moves.push_back({u, v});
    append_matching(g, without(a_side, u), without(b_side, v), moves);
    for (Vertex t : kept) moves.push_back({t, t});
  } else {
    // Shortest path from A to u inside G[A ∪ T], searched backwards from u.
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Vertex> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(u);
    seen[static_cast<std::size_t>(u)] = 1;
    std::optional<Vertex> source;
    while (!q.empty() && !source) {
      Vertex w = q.front();
      q.pop();
      for (Vertex z : g.neighbors(w)) {
        auto zi = static_cast<std::size_t>(z);
        if (seen[zi] || !(kept.contains(z) || a_side.contains(z))) continue;
        seen[zi] = 1;
        parent[zi] = w;
        if (a_side.contains(z)) {
          source = z;
          break;
        }
        q.push(z);
      }
    }
    if (!source) throw InvariantError("no path from the vacated side to the attacked guard inside S_i");

    VertexSet on_path;
    for (Vertex w = *source; w != u; w = parent[static_cast<std::size_t>(w)]) {
      moves.push_back({w, parent[static_cast<std::size_t>(w)]});
      on_path.insert(w);
    }
    moves.push_back({u, v});
    on_path.insert(u);
    append_matching(g, without(a_side, *source), without(b_side, v), moves);
    for (Vertex t : kept)
      if (!on_path.contains(t)) moves.push_back({t, t});
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

PlusOneStep moves_plus_one(const Graph& g, const Configuration& base, Vertex extra, Vertex a, Vertex b) {
  if (!g.adjacent(a, b)) throw PreconditionError("attack on a non-edge");
  if (base.contains(extra)) throw PreconditionError("extra guard must sit outside the base cover");
  Configuration config = base;
  config.insert(extra);
  if (config.contains(a) && config.contains(b)) return {swap_moves(config, a, b), extra};
  if (!config.contains(a) && !config.contains(b)) throw InvariantError("attacked edge is unguarded");

  const Vertex u = config.contains(a) ? a : b;
  const Vertex v = u == a ? b : a;
  if (!base.contains(u)) throw InvariantError("base configuration is not a vertex cover");

  // Path extra, s_0, ..., u with s_0.. inside the base cover.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(extra);
  seen[static_cast<std::size_t>(extra)] = 1;
  while (!q.empty() && !seen[static_cast<std::size_t>(u)]) {
    Vertex w = q.front();
    q.pop();
    for (Vertex z : g.neighbors(w)) {
      auto zi = static_cast<std::size_t>(z);
      if (seen[zi] || !base.contains(z)) continue;
      seen[zi] = 1;
      parent[zi] = w;
      q.push(z);
    }
  }
  if (!seen[static_cast<std::size_t>(u)]) throw InvariantError("base cover is not connected");

  MoveSet moves{{u, v}};
  VertexSet moved{u};
  for (Vertex w = u; w != extra; w = parent[static_cast<std::size_t>(w)]) {
    Vertex from = parent[static_cast<std::size_t>(w)];
    moves.push_back({from, w});
    moved.insert(from);
  }
  for (Vertex w : config)
    if (!moved.contains(w)) moves.push_back({w, w});
  std::sort(moves.begin(), moves.end());
  return {std::move(moves), v};
}

bool verify_moveset(const Graph& g, const Configuration& s, const Configuration& t, const MoveSet& moves,
                    std::optional<Edge> attack) {
  if (moves.size() != s.size() || moves.size() != t.size()) return false;
  std::vector<Vertex> froms, tos;
  for (const Move& m : moves) {
    if (m.from < 0 || m.from >= g.order() || m.to < 0 || m.to >= g.order()) return false;
    if (m.from != m.to && !g.adjacent(m.from, m.to)) return false;
    froms.push_back(m.from);
    tos.push_back(m.to);
  }
  std::sort(froms.begin(), froms.end());
  std::sort(tos.begin(), tos.end());
  if (froms != s.ids() || tos != t.ids()) return false;
  if (attack) {
    if (!g.adjacent(attack->u, attack->v)) return false;
    bool crossed = std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
      return (m.from == attack->u && m.to == attack->v) || (m.from == attack->v && m.to == attack->u);
    });
    if (!crossed) return false;
  }
  for (const Edge& e : g.edges())
    if (!std::binary_search(tos.begin(), tos.end(), e.u) && !std::binary_search(tos.begin(), tos.end(), e.v))
      return false;
  return true;
}

DefenseSession DefenseSession::create(const Graph& g, const CharReport& report, std::optional<Configuration> start,
                                      SolverMode mode, const SolverLimits& limits) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError("a defense session needs a connected graph with at least two vertices");
  DefenseSession s;
  s.graph_ = g;
  s.solver_mode_ = mode;
  s.limits_ = limits;
  s.mvc_ = report.mvc;
  s.cut_vertices_ = report.cut_vertices;

  if (report.verdict == Verdict::evc_equals_mvc) {
    s.mode_ = StrategyMode::hall_equal;
    if (start) {
      if (static_cast<int>(start->size()) != s.mvc_ || !is_vertex_cover(g, *start) ||
          !s.cut_vertices_.is_subset_of(*start))
        throw PreconditionError("start configuration must be a minimum vertex cover containing every cut vertex");
      s.config_ = *start;
    } else {
      CoverResult c = mvc_forced(g, s.cut_vertices_, mode, limits);
      if (c.size != s.mvc_) throw EvidenceError("no minimum vertex cover contains every cut vertex");
      s.config_ = c.cover;
    }
  } else if (report.verdict == Verdict::evc_equals_mvc_plus_1 && report.biconnected) {
    s.mode_ = StrategyMode::connected_plus_one;
    if (start) {
      bool found = false;
      if (static_cast<int>(start->size()) == s.mvc_ + 1) {
        for (Vertex z : *start) {
          VertexSet base = without(*start, z);
          if (is_connected_cover(g, base)) {
            s.base_cover_ = base;
            s.extra_vertex_ = z;
            found = true;
            break;
          }
        }
      }
      if (!found) throw PreconditionError("start configuration must be a connected minimum cover plus one vertex");
    } else {
      s.base_cover_ = mvc_forced(g, {}, mode, limits).cover;
      if (!induces_connected(g, s.base_cover_)) throw EvidenceError("minimum vertex cover is not connected");
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!s.base_cover_.contains(v)) {
          s.extra_vertex_ = v;
          break;
        }
      }
    }
    s.config_ = s.base_cover_ | VertexSet{s.extra_vertex_};
  } else {
    throw EvidenceError("no certified strategy for verdict " + to_string(report.verdict));
  }
  return s;
}

MoveSet DefenseSession::defend_hall_equal(Vertex a, Vertex b, Configuration& next) {
  bool has_a = config_.contains(a), has_b = config_.contains(b);
  if (has_a && has_b) {
    next = config_;
    last_trace_ = {{}, config_};
    return swap_moves(config_, a, b);
  }
  if (!has_a && !has_b) throw InvariantError("attacked edge is unguarded");
  const Vertex u = has_a ? a : b;
  const Vertex v = has_a ? b : a;

  VertexSet forced = cut_vertices_;
  forced.insert(v);
  CoverResult candidate = mvc_forced(graph_, forced, solver_mode_, limits_);
  if (candidate.size != mvc_)
    throw InvariantError("no minimum vertex cover contains the cut vertices and " + graph_.label(v));
  last_trace_ = refine_candidate(graph_, config_, candidate.cover, v, cut_vertices_);
  next = last_trace_.final;
  return moves_hall_equal(graph_, config_, next, {u, v});
}

void DefenseSession::check_round_invariants(const Configuration& next) const {
  if (!is_vertex_cover(graph_, next)) throw InvariantError("round ended on a non-cover");
  if (mode_ == StrategyMode::hall_equal) {
    if (static_cast<int>(next.size()) != mvc_ || !cut_vertices_.is_subset_of(next))
      throw InvariantError("round ended outside the minimum covers containing the cut vertices");
  } else {
    if (!base_cover_.is_subset_of(next))
      throw InvariantError("round ended without the base cover");
    if (static_cast<int>(next.size()) != mvc_ + 1) throw InvariantError("round changed the guard count");
  }
}

const RoundRecord& DefenseSession::defend(Vertex a, Vertex b) {
  if (finished_) throw PreconditionError("session is finished");
  if (a < 0 || b < 0 || a >= graph_.order() || b >= graph_.order() || !graph_.adjacent(a, b))
    throw PreconditionError("attack on a non-edge");
  const std::size_t round_no = round_ + 1;

  Configuration next;
  MoveSet moves;
  Vertex next_extra = extra_vertex_;
  try {
    if (mode_ == StrategyMode::hall_equal) {
      moves = defend_hall_equal(a, b, next);
    } else {
      PlusOneStep step = moves_plus_one(graph_, base_cover_, extra_vertex_, a, b);
      moves = std::move(step.moves);
      next_extra = step.extra;
      next = base_cover_ | VertexSet{next_extra};
    }
  } catch (const InvariantError& e) {
    finished_ = true;
    throw DefenseImpossible(e.what(), round_no);
  }

  if (!verify_moveset(graph_, config_, next, moves, Edge::canonical(a, b))) {
    finished_ = true;
    throw InvariantError("strategy produced an invalid move set");
  }
  check_round_invariants(next);

  config_ = std::move(next);
  extra_vertex_ = next_extra;
  round_ = round_no;
  log_.push_back({round_no, a, b, std::move(moves), config_});
  return log_.back();
}

}  // namespace evc
