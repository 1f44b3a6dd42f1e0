#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace evc {

using Vertex = int;

/// Set of vertex ids. Canonical form is the sorted, duplicate-free id list.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
      if (mask & 1U) s.ids_.push_back(v);
    return s;
  }

  /// Only valid when every member is < 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v : ids_) m |= std::uint64_t{1} << v;
    return m;
  }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }

  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }
  void erase(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                          std::back_inserter(r.ids_));
    return r;
  }
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }
  VertexSet operator^(const VertexSet& o) const {
    VertexSet r;
    std::set_symmetric_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                                  std::back_inserter(r.ids_));
    return r;
  }

  const std::vector<Vertex>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex front() const { return ids_.front(); }

  // Lexicographic on the sorted id list.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

}  // namespace evc
