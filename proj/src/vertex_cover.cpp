#include "evc/vertex_cover.hpp"

#include <bit>
#include <optional>

#include "evc/errors.hpp"
#include "evc/structure.hpp"

namespace evc {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }

void check_exact_limit(const Graph& g, int vertices, const SolverLimits& limits) {
  if (g.order() > 64) throw LimitError("exact vertex cover supports at most 64 vertices");
  if (vertices > limits.exact_max_vertices)
    throw LimitError("exact vertex cover limited to " + std::to_string(limits.exact_max_vertices) +
                     " vertices (instance has " + std::to_string(vertices) + ")");
}

/// Branch and bound over the subgraph induced by a vertex mask.
class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : adj_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  }

  /// Smallest cover of G[remaining] of size < bound, if any.
  std::optional<Mask> smallest_below(Mask remaining, int bound) {
    best_size_ = bound;
    best_.reset();
    search(remaining, 0, 0);
    return best_;
  }

  int minimum(Mask remaining) {
    auto found = smallest_below(remaining, std::popcount(remaining) + 1);
    return std::popcount(*found);
  }

 private:
  Mask nbrs(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int greedy_matching(Mask remaining) const {
    int size = 0;
    Mask free = remaining;
    while (free) {
      int v = lowest(free);
      free &= ~bit(v);
      Mask candidates = nbrs(v) & free;
      if (candidates) {
        free &= ~bit(lowest(candidates));
        ++size;
      }
    }
    return size;
  }

  void search(Mask remaining, Mask chosen, int count) {
    // Least vertex that still has an uncovered edge.
    Mask active = 0;
    for (Mask m = remaining; m; m &= m - 1) {
      int v = lowest(m);
      if (nbrs(v) & remaining) {
        active = bit(v);
        break;
      }
    }
    if (!active) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (count + greedy_matching(remaining) >= best_size_) return;

    int u = lowest(active);
    Mask around = nbrs(u) & remaining;
    if (std::popcount(around) > 1) search(remaining & ~bit(u), chosen | bit(u), count + 1);
    // Leaving u out forces every uncovered neighbor in.
    search(remaining & ~bit(u) & ~around, chosen | around, count + std::popcount(around));
  }

  std::vector<Mask> adj_;
  int best_size_ = 0;
  std::optional<Mask> best_;
};

/// Lexicographically least optimal cover of G[remaining]: decide vertices in id order,
/// keeping a vertex whenever an optimal completion still exists.
Mask lex_least_optimal(CoverSearch& search, Mask remaining, int optimum) {
  Mask taken = 0;
  int count = 0;
  for (Mask m = remaining; m && count < optimum; m &= m - 1) {
    int v = lowest(m);
    Mask trial = taken | bit(v);
    int budget = optimum - count - 1;
    if (search.smallest_below(remaining & ~trial, budget + 1)) {
      taken = trial;
      ++count;
    }
  }
  return taken;
}

VertexSet to_set(Mask m) { return VertexSet::from_mask(m); }

CoverResult forced_exact(const Graph& g, const VertexSet& forced, const SolverLimits& limits) {
  check_exact_limit(g, g.order() - static_cast<int>(forced.size()), limits);
  CoverSearch search(g);
  Mask remaining = g.all_mask() & ~forced.mask();
  int optimum = search.minimum(remaining);
  Mask rest = lex_least_optimal(search, remaining, optimum);
  VertexSet cover = forced | to_set(rest);
  return {static_cast<int>(cover.size()), cover, forced};
}

}  // namespace

CoverResult mvc_exact(const Graph& g, const SolverLimits& limits) { return forced_exact(g, {}, limits); }

CoverResult mvc_chordal(const Graph& g) {
  ChordalTest test = is_chordal(g);
  if (!test.chordal) throw PreconditionError("mvc_chordal requires a chordal graph");
  std::vector<char> independent(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : test.peo) {
    bool free = true;
    for (Vertex w : g.neighbors(v)) free = free && !independent[static_cast<std::size_t>(w)];
    if (free) independent[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!independent[static_cast<std::size_t>(v)]) cover.push_back(v);
  VertexSet s(std::move(cover));
  return {static_cast<int>(s.size()), s, {}};
}

CoverResult mvc_forced(const Graph& g, const VertexSet& forced, SolverMode mode, const SolverLimits& limits) {
  for (Vertex v : forced)
    if (v < 0 || v >= g.order()) throw PreconditionError("forced vertex out of range");
  if (mode == SolverMode::polynomial) {
    VertexSet kept = g.all_vertices() - forced;
    Graph rest = g.induced(kept);
    if (is_chordal(rest).chordal) {
      CoverResult sub = mvc_chordal(rest);
      std::vector<Vertex> cover(forced.begin(), forced.end());
      for (Vertex v : sub.cover) cover.push_back(kept.ids()[static_cast<std::size_t>(v)]);
      VertexSet s(std::move(cover));
      return {static_cast<int>(s.size()), s, forced};
    }
  }
  return forced_exact(g, forced, limits);
}

int mvc_size(const Graph& g, SolverMode mode, const SolverLimits& limits) {
  return mvc_forced(g, {}, mode, limits).size;
}

bool has_min_cover_containing(const Graph& g, const VertexSet& u, SolverMode mode, const SolverLimits& limits) {
  return has_min_cover_containing(g, u, mvc_size(g, mode, limits), mode, limits);
}

bool has_min_cover_containing(const Graph& g, const VertexSet& u, int mvc, SolverMode mode,
                              const SolverLimits& limits) {
  return mvc_forced(g, u, mode, limits).size == mvc;
}

namespace {

/// Include-first DFS over ids in ascending order; yields covers in lexicographic order.
class CoverEnumerator {
 public:
  CoverEnumerator(const Graph& g, int k, Mask forced, const std::function<bool(Mask)>& visit)
      : n_(g.order()), k_(k), forced_(forced), visit_(visit), adj_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  }

  void run() {
    if (k_ < 0 || k_ > n_) return;
    stopped_ = false;
    step(0, 0, forced_, 0);
  }

 private:
  Mask nbrs(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int lower_bound(int v, Mask required) const {
    Mask undecided = (v >= 64 ? 0 : ~((Mask{1} << v) - 1)) & (n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1);
    int need = std::popcount(required & undecided);
    Mask free = undecided & ~required;
    while (free) {
      int a = lowest(free);
      free &= ~bit(a);
      Mask c = nbrs(a) & free;
      if (c) {
        free &= ~bit(lowest(c));
        ++need;
      }
    }
    return need;
  }

  // `required`: undecided vertices that must be taken (forced, or neighbor of an excluded vertex).
  void step(int v, Mask chosen, Mask required, int count) {
    if (stopped_) return;
    if (v == n_) {
      if (count == k_ && !visit_(chosen)) stopped_ = true;
      return;
    }
    if (count + lower_bound(v, required) > k_) return;
    if (count < k_) step(v + 1, chosen | bit(v), required, count + 1);
    if (required & bit(v)) return;
    Mask lower = nbrs(v) & (bit(v) - 1);
    if ((lower & ~chosen) != 0) return;
    step(v + 1, chosen, required | (nbrs(v) & ~(bit(v + 1) - 1)), count);
  }

  int n_;
  int k_;
  Mask forced_;
  const std::function<bool(Mask)>& visit_;
  std::vector<Mask> adj_;
  bool stopped_ = false;
};

void check_enum_limit(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.enumeration_max_vertices || g.order() > 63)
    throw LimitError("cover enumeration limited to " + std::to_string(limits.enumeration_max_vertices) +
                     " vertices (instance has " + std::to_string(g.order()) + ")");
}

}  // namespace

void for_each_cover_mask(const Graph& g, int k, std::uint64_t forced, const std::function<bool(std::uint64_t)>& visit,
                         const SolverLimits& limits) {
  check_enum_limit(g, limits);
  CoverEnumerator(g, k, forced, visit).run();
}

std::vector<std::uint64_t> cover_masks(const Graph& g, int k, std::uint64_t forced, const SolverLimits& limits) {
  std::vector<std::uint64_t> out;
  for_each_cover_mask(
      g, k, forced,
      [&](std::uint64_t m) {
        out.push_back(m);
        return true;
      },
      limits);
  return out;
}

std::vector<VertexSet> enumerate_covers(const Graph& g, int k, const SolverLimits& limits) {
  std::vector<VertexSet> out;
  for (Mask m : cover_masks(g, k, 0, limits)) out.push_back(to_set(m));
  return out;
}

bool all_forced_min_covers_connected(const Graph& g, const VertexSet& x, const SolverLimits& limits) {
  check_enum_limit(g, limits);
  int k = mvc_forced(g, x, SolverMode::exact, limits).size;
  bool all_connected = true;
  for_each_cover_mask(
      g, k, x.mask(),
      [&](std::uint64_t m) {
        all_connected = induces_connected(g, to_set(m));
        return all_connected;
      },
      limits);
  return all_connected;
}

}  // namespace evc
