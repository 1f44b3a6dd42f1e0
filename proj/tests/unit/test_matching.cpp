#include <doctest.h>

#include <algorithm>
#include <random>

#include "evc/matching.hpp"

using namespace evc;

namespace {

int brute_matching(const BipartiteGraph& h) {
  int best = 0;
  std::vector<char> used(std::size_t(h.right_size()), 0);
  auto rec = [&](auto&& self, int l, int size) -> void {
    if (l == h.left_size()) {
      best = std::max(best, size);
      return;
    }
    self(self, l + 1, size);
    for (int r : h.adj(l)) {
      if (used[std::size_t(r)]) continue;
      used[std::size_t(r)] = 1;
      self(self, l + 1, size + 1);
      used[std::size_t(r)] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("perfect matching on a path-shaped graph") {
    BipartiteGraph h(3, 3);
    h.add_edge(0, 0);
    h.add_edge(0, 1);
    h.add_edge(1, 1);
    h.add_edge(1, 2);
    h.add_edge(2, 2);
    Matching m = maximum_matching(h);
    CHECK(m.perfect());
    CHECK(m.mate_left == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("hall violator from an unmatched right vertex") {
    // Right vertices 0 and 1 both see only left 0.
    BipartiteGraph h(2, 3);
    h.add_edge(0, 0);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    Matching m = maximum_matching(h);
    CHECK(m.size == 2);
    int free_right = m.mate_right[0] == kUnmatched ? 0 : 1;
    AlternatingReach reach = alternating_reach_from_right(h, m, free_right);
    CHECK(reach.right == std::vector<int>{0, 1});
    CHECK(reach.left == std::vector<int>{0});
  }

  TEST_CASE("property: size and deficiency sets on random graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
      int left = int(rng() % 7), right = int(rng() % 7);
      BipartiteGraph h(left, right);
      std::vector<std::vector<char>> adj(std::size_t(left), std::vector<char>(std::size_t(right), 0));
      for (int l = 0; l < left; ++l)
        for (int r = 0; r < right; ++r)
          if (rng() % 3 == 0) {
            h.add_edge(l, r);
            adj[std::size_t(l)][std::size_t(r)] = 1;
          }
      Matching m = maximum_matching(h);
      CHECK(m.size == brute_matching(h));
      int count = 0;
      for (int l = 0; l < left; ++l) {
        int r = m.mate_left[std::size_t(l)];
        if (r == kUnmatched) continue;
        ++count;
        CHECK(adj[std::size_t(l)][std::size_t(r)]);
        CHECK(m.mate_right[std::size_t(r)] == l);
      }
      CHECK(count == m.size);
      for (int r = 0; r < right; ++r) {
        if (m.mate_right[std::size_t(r)] != kUnmatched) continue;
        AlternatingReach reach = alternating_reach_from_right(h, m, r);
        CHECK(reach.left.size() + 1 == reach.right.size());
        std::vector<int> nbrs;
        for (int rr : reach.right)
          for (int l = 0; l < left; ++l)
            if (adj[std::size_t(l)][std::size_t(rr)]) nbrs.push_back(l);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        CHECK(nbrs == reach.left);
      }
    }
  }
}
