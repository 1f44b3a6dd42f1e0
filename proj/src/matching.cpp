#include "evc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace evc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& h)
      : h_(h),
        mate_left_(static_cast<std::size_t>(h.left_size()), kUnmatched),
        mate_right_(static_cast<std::size_t>(h.right_size()), kUnmatched),
        dist_(static_cast<std::size_t>(h.left_size()), kInf) {}

  Matching run() {
    int size = 0;
    while (bfs()) {
      for (int l = 0; l < h_.left_size(); ++l)
        if (mate_left_[static_cast<std::size_t>(l)] == kUnmatched && dfs(l)) ++size;
    }
    return {std::move(mate_left_), std::move(mate_right_), size};
  }

 private:
  bool bfs() {
    std::queue<int> q;
    for (int l = 0; l < h_.left_size(); ++l) {
      if (mate_left_[static_cast<std::size_t>(l)] == kUnmatched) {
        dist_[static_cast<std::size_t>(l)] = 0;
        q.push(l);
      } else {
        dist_[static_cast<std::size_t>(l)] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : h_.adj(l)) {
        int next = mate_right_[static_cast<std::size_t>(r)];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (int r : h_.adj(l)) {
      int next = mate_right_[static_cast<std::size_t>(r)];
      if (next == kUnmatched ||
          (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(l)] + 1 && dfs(next))) {
        mate_left_[static_cast<std::size_t>(l)] = r;
        mate_right_[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  const BipartiteGraph& h_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& h) { return HopcroftKarp(h).run(); }

AlternatingReach alternating_reach_from_right(const BipartiteGraph& h, const Matching& m, int start) {
  std::vector<std::vector<int>> right_adj(static_cast<std::size_t>(h.right_size()));
  for (int l = 0; l < h.left_size(); ++l)
    for (int r : h.adj(l)) right_adj[static_cast<std::size_t>(r)].push_back(l);

  std::vector<char> seen_right(right_adj.size(), 0), seen_left(static_cast<std::size_t>(h.left_size()), 0);
  AlternatingReach out;
  std::queue<int> q;
  q.push(start);
  seen_right[static_cast<std::size_t>(start)] = 1;
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    out.right.push_back(r);
    for (int l : right_adj[static_cast<std::size_t>(r)]) {
      if (seen_left[static_cast<std::size_t>(l)]) continue;
      seen_left[static_cast<std::size_t>(l)] = 1;
      out.left.push_back(l);
      int mate = m.mate_left[static_cast<std::size_t>(l)];
      if (mate != kUnmatched && !seen_right[static_cast<std::size_t>(mate)]) {
        seen_right[static_cast<std::size_t>(mate)] = 1;
        q.push(mate);
      }
    }
  }
  std::sort(out.right.begin(), out.right.end());
  std::sort(out.left.begin(), out.left.end());
  return out;
}

}  // namespace evc
