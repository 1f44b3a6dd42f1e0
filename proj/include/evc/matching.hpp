#pragma once

#include <vector>

namespace evc {

/// Bipartite graph on left vertices 0..L-1 and right vertices 0..R-1.
class BipartiteGraph {
 public:
  BipartiteGraph(int left, int right) : adj_(static_cast<std::size_t>(left)), right_(right) {}

  void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

  int left_size() const { return static_cast<int>(adj_.size()); }
  int right_size() const { return right_; }
  const std::vector<int>& adj(int l) const { return adj_[static_cast<std::size_t>(l)]; }

 private:
  std::vector<std::vector<int>> adj_;
  int right_;
};

inline constexpr int kUnmatched = -1;

struct Matching {
  std::vector<int> mate_left;
  std::vector<int> mate_right;
  int size = 0;

  bool saturates_left() const { return size == static_cast<int>(mate_left.size()); }
  bool perfect() const { return saturates_left() && mate_left.size() == mate_right.size(); }
};

/// Hopcroft-Karp maximum matching. Deterministic for a fixed edge insertion order.
Matching maximum_matching(const BipartiteGraph& h);

/// Vertices reachable from the unmatched right vertex `start` along alternating paths
/// (non-matching edge right->left, matching edge left->right). `right` includes `start`;
/// `left` is exactly the neighborhood of `right`. When the matching is maximum,
/// every left vertex found is matched, so |left| = |right| - 1 (a Hall violator).
struct AlternatingReach {
  std::vector<int> right;
  std::vector<int> left;
};

AlternatingReach alternating_reach_from_right(const BipartiteGraph& h, const Matching& m, int start);

}  // namespace evc
